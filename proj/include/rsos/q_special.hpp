#pragma once

// Infinite products, q-gamma ratios, theta functions and the basic
// hypergeometric series, all with nome p = q^{2(k+2)}.

#include <vector>

#include "rsos/series.hpp"

namespace rsos {

/// u-exponent of p = q^{2(k+2)}.
inline int p_uexp(int k) { return 4 * (k + 2); }

/// A spectral argument sign * u^uexp * zeta^zexp standing in for zeta.
/// The default is zeta itself; crossing uses {-1, -2, 1}.
struct Spectral {
    int sign = 1;
    int uexp = 0;
    int zexp = 1;

    /// The argument raised to the m-th power as a monomial series.
    QSeries power(int m) const;
    Spectral inverse() const { return {sign, -uexp, -zexp}; }
    /// Product of two arguments (zeta_1 zeta_2).
    Spectral operator*(const Spectral& o) const { return {sign * o.sign, uexp + o.uexp, zexp + o.zexp}; }
};

/// num / den where den may have a non-unit leading coefficient.
struct SeriesFraction {
    QSeries num;
    QSeries den = QSeries::one();

    /// num * den^{-1} below u^order; throws NonUnitLeadingCoefficient when
    /// den is not a unit.
    QSeries value(int order) const;
    /// num * o.den == o.num * den below u^bound, with both sides known that far.
    bool equals(const SeriesFraction& o, int bound) const;
    SeriesFraction operator*(const SeriesFraction& o) const { return {num * o.num, den * o.den}; }
    SeriesFraction operator/(const SeriesFraction& o) const { return {num * o.den, den * o.num}; }
    bool is_zero() const { return num.is_zero(); }
};

/// (a; b)_inf truncated below u^order. a needs nonnegative valuation and b
/// positive valuation.
QSeries pochhammer(const QSeries& a, const QSeries& b, int order);

/// (a; b, c)_inf = prod_{n1,n2 >= 0} (1 - a b^n1 c^n2).
QSeries double_pochhammer(const QSeries& a, const QSeries& b, const QSeries& c, int order);

/// Finite product (a; b)_m.
QSeries pochhammer_finite(const QSeries& a, const QSeries& b, int m, int order);

/// Arguments x of Gamma_p(x); each must make p^x an integral power of u.
struct GammaRatioSpec {
    std::vector<Rational> numerator_args;
    std::vector<Rational> denominator_args;
};

/// prod Gamma_p(num) / prod Gamma_p(den). A pole in a denominator argument
/// gives exactly zero; a pole in the numerator throws PolarArgument.
QSeries gamma_p_ratio(const GammaRatioSpec& spec, int k, int order);

/// Gamma ratio without the balance requirement: the leftover (1-p)^r is
/// expanded as a binomial series.
QSeries gamma_p_ratio_free(const GammaRatioSpec& spec, int k, int order);

/// (1 - p)^r as a binomial series.
QSeries one_minus_p_power(const Rational& r, int k, int order);

/// (p;p)(z;p)(p/z;p) for a monomial-leading z.
QSeries theta_p(const QSeries& z, int k, int order);

/// The four double-product ratio eta(z) with fusion label n.
SeriesFraction eta_fraction(const QSeries& z, int n, int k, int order);
QSeries eta_fn(const QSeries& z, int n, int k, int order);

/// kappa^{(M,N)} evaluated at the spectral argument.
SeriesFraction kappa_fraction(int M, int N, const Spectral& zeta, int order);
QSeries kappa_norm(int M, int N, const Spectral& zeta, int order);

/// 2phi1(p^alpha, p^beta; p^gamma; p, z) summed over at most n_terms terms.
QSeries phi21(const Rational& alpha, const Rational& beta, const Rational& gamma, const QSeries& z, int k,
              int n_terms, int order);

/// The prefactor gamma(z) of the q-KZ matrix elements.
QSeries gamma_z(const QSeries& z, int n, int k, int order);

} // namespace rsos
