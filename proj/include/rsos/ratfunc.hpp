#pragma once

// Exact rational functions of u = q^{1/2} over Q.

#include <iosfwd>
#include <string>
#include <vector>

#include "rsos/series.hpp"

namespace rsos {

/// Dense univariate polynomial over Q, coefficient i belongs to u^i.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> c);
    Poly(const Rational& c);
    static Poly monomial(const Rational& c, int deg);

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    Rational coeff(int i) const;
    const Rational& lead() const { return c_.back(); }
    /// Number of leading zero coefficients from u^0 upward.
    int low_order() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly scaled(const Rational& c) const;
    /// Divides by u^k, which must divide exactly.
    Poly shift_down(int k) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Euclidean division over Q.
    static void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
    static Poly gcd(Poly a, Poly b);

    long double evaluate(long double u) const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// u^shift * num / den with num(0) != 0, den(0) = 1 and gcd(num, den) = 1,
/// so equal functions have identical representations.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(const Rational& c);
    RatFunc(long c) : RatFunc(Rational(c)) {}
    RatFunc(int c) : RatFunc(Rational(c)) {}
    RatFunc(Poly num, Poly den, int shift = 0);

    /// c * u^e
    static RatFunc u_power(int e, const Rational& c = Rational(1));
    /// c * q^e
    static RatFunc q_power(int e, const Rational& c = Rational(1)) { return u_power(2 * e, c); }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const;
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    int shift() const noexcept { return shift_; }

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;
    RatFunc pow(int n) const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Laurent expansion in u up to (exclusive) the given order.
    QSeries to_series(int order) const;
    long double evaluate(long double u) const;
    std::string to_string() const;

private:
    void canonicalize();
    Poly num_;
    Poly den_{Rational(1)};
    int shift_ = 0;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

/// [n] = (q^n - q^{-n}) / (q - q^{-1})
RatFunc q_integer(int n);
/// q-binomial in the symmetric normalization built from [n].
RatFunc q_binomial(int n, int k);

} // namespace rsos
