#pragma once

// Exact truncated Laurent series in u = q^{1/2} whose coefficients are
// Laurent polynomials in the spectral parameter zeta over the rationals.

#include <climits>
#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace rsos {

using Rational = mpq_class;

/// Sentinel truncation order for series that are known exactly.
inline constexpr int kExact = INT_MAX / 4;

/// Default truncation order (exclusive u-exponent bound), i.e. q^{8.5}.
inline constexpr int kDefaultOrder = 17;

/// Reads RSOS_ORDER from the environment, falling back to kDefaultOrder.
int default_order();

Rational make_rational(long num, long den = 1);

/// Laurent polynomial in zeta with rational coefficients, kept sorted by
/// exponent with no stored zeros.
class ZetaPoly {
public:
    using Term = std::pair<int, Rational>;

    ZetaPoly() = default;
    ZetaPoly(const Rational& c, int zexp = 0);
    static ZetaPoly monomial(const Rational& c, int zexp) { return ZetaPoly(c, zexp); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    int min_exp() const { return terms_.front().first; }
    int max_exp() const { return terms_.back().first; }
    Rational coeff(int zexp) const;

    /// Adds c * zeta^zexp in place.
    void add_term(int zexp, const Rational& c);

    ZetaPoly& operator+=(const ZetaPoly& o);
    ZetaPoly& operator-=(const ZetaPoly& o);
    ZetaPoly& operator*=(const Rational& c);
    friend ZetaPoly operator+(ZetaPoly a, const ZetaPoly& b) { return a += b; }
    friend ZetaPoly operator-(ZetaPoly a, const ZetaPoly& b) { return a -= b; }
    friend ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b);
    friend ZetaPoly operator*(ZetaPoly a, const Rational& c) { return a *= c; }
    ZetaPoly operator-() const;
    friend bool operator==(const ZetaPoly& a, const ZetaPoly& b) { return a.terms_ == b.terms_; }

    /// zeta^k -> zeta^{factor*k}
    ZetaPoly scale_exponents(int factor) const;
    /// zeta^k -> sign^k zeta^k (sign = +-1)
    ZetaPoly sign_twist(int sign) const;
    /// Value at zeta = 1.
    Rational at_one() const;
    /// d/dzeta at zeta = 1.
    Rational derivative_at_one() const;
    /// Numeric value at a real zeta.
    long double evaluate(long double zeta) const;

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// Truncated series sum_{e >= valuation} c_e u^e + O(u^order).
///
/// Arithmetic propagates precision by the usual min rule: sums keep the
/// smaller order, products keep min(va + ob, vb + oa). Exactly known series
/// carry order kExact.
class QSeries {
public:
    QSeries() : val_(0), order_(kExact) {}
    explicit QSeries(const ZetaPoly& c, int order = kExact);
    QSeries(const Rational& c, int order = kExact) : QSeries(ZetaPoly(c), order) {}

    static QSeries zero(int order = kExact);
    static QSeries one(int order = kExact) { return QSeries(Rational(1), order); }
    /// c * u^uexp * zeta^zexp
    static QSeries monomial(const Rational& c, int uexp, int zexp = 0, int order = kExact);
    /// Builds from dense coefficients starting at u^valuation.
    static QSeries from_coeffs(int valuation, std::vector<ZetaPoly> coeffs, int order);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_exact() const noexcept { return order_ >= kExact; }
    /// Exponent of the leading nonzero term (order() if identically zero).
    int valuation() const noexcept { return is_zero() ? order_ : val_; }
    int order() const noexcept { return order_; }
    /// Coefficient of u^e (zero outside the stored range; must be e < order()).
    ZetaPoly coeff(int e) const;
    const ZetaPoly& leading() const { return coeffs_.front(); }
    /// One past the highest stored exponent.
    int end_exponent() const noexcept { return val_ + static_cast<int>(coeffs_.size()); }

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries operator-() const;
    QSeries scaled(const Rational& c) const;
    /// Multiplies by c u^uexp zeta^zexp.
    QSeries shifted(int uexp, int zexp = 0, const Rational& c = Rational(1)) const;

    QSeries truncated(int order) const;
    QSeries pow(int n) const;

    /// zeta^k -> zeta^{factor k}
    QSeries scale_zeta(int factor) const;
    /// Coefficientwise value / derivative at zeta = 1.
    QSeries at_zeta_one() const;
    QSeries zeta_derivative_at_one() const;

    /// a == b on every exponent below min(order(), other.order(), bound).
    bool agrees_with(const QSeries& other, int bound = kExact) const;

    long double evaluate(long double u, long double zeta) const;

    /// Human readable rendering in q (u exponents halved).
    std::string to_string() const;

private:
    void normalize();

    int val_;
    int order_;
    std::vector<ZetaPoly> coeffs_;
};

/// Multiplicative inverse; the leading coefficient must be a single
/// zeta-monomial (NonUnitLeadingCoefficient otherwise). For exact input the
/// expansion is carried to the requested absolute order (default_order()
/// plus guard digits when omitted); inexact input keeps its natural precision.
QSeries invert(const QSeries& a, int order = kExact);
QSeries operator/(const QSeries& a, const QSeries& b);

/// Principal square root (positive leading rational). Throws NotAFormalSquare
/// unless the valuation and leading zeta exponent are even and the leading
/// rational is a square. The order argument behaves as for invert.
QSeries sqrt(const QSeries& a, int order = kExact);

enum class SeriesOp { add, sub, mul };
QSeries series_arith(const QSeries& a, const QSeries& b, SeriesOp op);

std::ostream& operator<<(std::ostream& os, const QSeries& s);
std::ostream& operator<<(std::ostream& os, const ZetaPoly& p);

bool is_rational_square(const Rational& r);
Rational rational_sqrt(const Rational& r);

} // namespace rsos
