#include "rsos/q_special.hpp"

#include <algorithm>
#include <stdexcept>

#include "rsos/errors.hpp"

namespace rsos {

namespace {

QSeries u_mono(int e) { return QSeries::monomial(Rational(1), e); }

QSeries one_minus(const QSeries& x) { return QSeries::one() - x; }

// prod_{n >= 0} (1 - a b^n) for val(b) > 0. Finitely many factors may have
// non-positive valuation; they are multiplied in exactly at the end.
QSeries peeled_product(const QSeries& a, const QSeries& b, int order) {
    if (b.valuation() <= 0) throw DivergentProduct("product base must have positive valuation");
    std::vector<QSeries> peeled;
    int neg = 0;
    QSeries x = a;
    while (!x.is_zero() && x.valuation() <= 0) {
        neg += x.valuation();
        peeled.push_back(one_minus(x));
        x = x * b;
    }
    const int tail_order = order - neg;
    QSeries tail = QSeries::one();
    while (x.valuation() < tail_order) {
        tail = (tail * one_minus(x)).truncated(tail_order);
        x = (x * b).truncated(tail_order);
    }
    tail = tail.truncated(tail_order);
    for (const auto& f : peeled) tail = tail * f;
    return tail.truncated(order);
}

// Valuation of (u^e; u^step)_inf.
int poch_valuation(int e, int step) {
    int v = 0;
    for (int x = e; x < 0; x += step) v += x;
    return v;
}

int gamma_exponent(const Rational& x, int k) {
    Rational e = x * p_uexp(k);
    if (e.get_den() != 1) throw std::invalid_argument("Gamma_p argument " + x.get_str() + " is not on the q lattice");
    return static_cast<int>(e.get_num().get_si());
}

bool is_gamma_pole(const Rational& x) { return x.get_den() == 1 && sgn(x) <= 0; }

} // namespace

QSeries Spectral::power(int m) const {
    const int s = (m % 2 != 0 && sign < 0) ? -1 : 1;
    return QSeries::monomial(Rational(s), m * uexp, m * zexp);
}

QSeries SeriesFraction::value(int order) const {
    if (num.is_zero()) return QSeries::zero(std::min(order, num.order() - den.valuation()));
    return (num * invert(den, order - num.valuation() + 1)).truncated(order);
}

bool SeriesFraction::equals(const SeriesFraction& o, int bound) const {
    QSeries lhs = num * o.den, rhs = o.num * den;
    return lhs.order() >= bound && rhs.order() >= bound && lhs.agrees_with(rhs, bound);
}

QSeries pochhammer(const QSeries& a, const QSeries& b, int order) {
    if (!a.is_zero() && a.valuation() < 0) throw DivergentProduct("(a;b) with a of negative valuation");
    if (b.valuation() <= 0) throw DivergentProduct("(a;b) with b of non-positive valuation");
    return peeled_product(a, b, order);
}

QSeries double_pochhammer(const QSeries& a, const QSeries& b, const QSeries& c, int order) {
    if (!a.is_zero() && a.valuation() < 0) throw DivergentProduct("(a;b,c) with a of negative valuation");
    if (b.valuation() <= 0 || c.valuation() <= 0) throw DivergentProduct("(a;b,c) with non-positive base");
    QSeries result = QSeries::one();
    QSeries x = a;
    while (x.valuation() < order) {
        result = (result * peeled_product(x, c, order)).truncated(order);
        x = (x * b).truncated(order);
    }
    return result.truncated(order);
}

QSeries pochhammer_finite(const QSeries& a, const QSeries& b, int m, int order) {
    QSeries result = QSeries::one();
    QSeries x = a;
    for (int i = 0; i < m; ++i) {
        result = result * one_minus(x);
        x = x * b;
    }
    return result.truncated(order);
}

namespace {

Rational imbalance(const GammaRatioSpec& spec) {
    Rational bal(0);
    for (const auto& x : spec.numerator_args) bal += 1 - x;
    for (const auto& x : spec.denominator_args) bal -= 1 - x;
    return bal;
}

QSeries pochhammer_part(const GammaRatioSpec& spec, int k, int order);

} // namespace

QSeries one_minus_p_power(const Rational& r, int k, int order) {
    const int P = p_uexp(k);
    std::vector<ZetaPoly> c(static_cast<std::size_t>(std::max(order, 1)));
    Rational b(1);
    for (int n = 0; n * P < order; ++n) {
        c[static_cast<std::size_t>(n * P)] = ZetaPoly((n % 2 ? -b : b));
        b *= (r - n) / Rational(n + 1);
    }
    return QSeries::from_coeffs(0, std::move(c), order);
}

QSeries gamma_p_ratio(const GammaRatioSpec& spec, int k, int order) {
    Rational bal = imbalance(spec);
    if (sgn(bal) != 0)
        throw UnbalancedPrefactor("sum of (1-x) differs by " + bal.get_str() + " between numerator and denominator");
    return pochhammer_part(spec, k, order);
}

QSeries gamma_p_ratio_free(const GammaRatioSpec& spec, int k, int order) {
    QSeries r = pochhammer_part(spec, k, order);
    if (r.is_zero()) return r;
    return (r * one_minus_p_power(imbalance(spec), k, order - r.valuation())).truncated(order);
}

namespace {

QSeries pochhammer_part(const GammaRatioSpec& spec, int k, int order) {
    for (const auto& x : spec.numerator_args)
        if (is_gamma_pole(x)) throw PolarArgument("Gamma_p pole at " + x.get_str() + " in the numerator");
    for (const auto& x : spec.denominator_args)
        if (is_gamma_pole(x)) return QSeries::zero(order);

    const int P = p_uexp(k);
    // Gamma ratio = (p;p)^{#num-#den} prod_den (p^y;p) / prod_num (p^x;p)
    int num_val = 0, den_val = 0, spread = 0;
    for (const auto& x : spec.numerator_args) {
        int v = poch_valuation(gamma_exponent(x, k), P);
        num_val += v;
        spread -= v;
    }
    for (const auto& y : spec.denominator_args) {
        int v = poch_valuation(gamma_exponent(y, k), P);
        den_val += v;
        spread -= v;
    }
    const int work = order + spread + 2 * std::abs(num_val) + 4;
    QSeries top = QSeries::one(), bottom = QSeries::one();
    for (const auto& y : spec.denominator_args)
        top = (top * peeled_product(u_mono(gamma_exponent(y, k)), u_mono(P), work)).truncated(work);
    for (const auto& x : spec.numerator_args)
        bottom = (bottom * peeled_product(u_mono(gamma_exponent(x, k)), u_mono(P), work)).truncated(work);
    const int extra = static_cast<int>(spec.numerator_args.size()) - static_cast<int>(spec.denominator_args.size());
    QSeries pp = peeled_product(u_mono(P), u_mono(P), work);
    if (extra > 0) top = top * pp.pow(extra);
    if (extra < 0) bottom = bottom * pp.pow(-extra);
    (void)den_val;
    return (top * invert(bottom, work)).truncated(order);
}

} // namespace

QSeries theta_p(const QSeries& z, int k, int order) {
    if (z.is_zero() || !z.leading().is_monomial())
        throw NonUnitLeadingCoefficient("theta_p argument must be monomial-leading");
    const int P = p_uexp(k);
    const int v = z.valuation();
    const int work = order + 2 * (std::abs(v) + P);
    QSeries pz = QSeries::monomial(Rational(1), P) * invert(z, work);
    QSeries r = peeled_product(u_mono(P), u_mono(P), work) * peeled_product(z, u_mono(P), work) *
                peeled_product(pz, u_mono(P), work);
    return r.truncated(order);
}

SeriesFraction eta_fraction(const QSeries& z, int n, int k, int order) {
    const int P = p_uexp(k);
    const QSeries q4 = u_mono(8), p = u_mono(P);
    auto dp = [&](int qexp) { return double_pochhammer(z.shifted(P + 2 * qexp), p, q4, order); };
    return {(dp(1 + n) * dp(3 - n)).truncated(order), (dp(1 - n) * dp(3 + n)).truncated(order)};
}

QSeries eta_fn(const QSeries& z, int n, int k, int order) {
    SeriesFraction f = eta_fraction(z, n, k, order);
    return (f.num * invert(f.den, order)).truncated(order);
}

SeriesFraction kappa_fraction(int M, int N, const Spectral& zeta, int order) {
    const QSeries z2 = zeta.power(2), zm2 = zeta.power(-2), q4 = u_mono(8);
    const int hi = 2 * (2 + M + N), lo = 2 * (2 + std::abs(M - N));
    auto poch = [&](const QSeries& x, int uexp) { return peeled_product(x.shifted(uexp), q4, order + 8); };
    SeriesFraction f;
    f.num = (zeta.power(std::min(M, N)) * poch(z2, hi) * poch(zm2, lo)).truncated(order + 8);
    f.den = (poch(zm2, hi) * poch(z2, lo)).truncated(order + 8);
    return f;
}

QSeries kappa_norm(int M, int N, const Spectral& zeta, int order) {
    SeriesFraction f = kappa_fraction(M, N, zeta, order);
    return (f.num * invert(f.den, order + 8)).truncated(order);
}

QSeries phi21(const Rational& alpha, const Rational& beta, const Rational& gamma, const QSeries& z, int k,
              int n_terms, int order) {
    const int P = p_uexp(k);
    const int ea = gamma_exponent(alpha, k), eb = gamma_exponent(beta, k), eg = gamma_exponent(gamma, k);
    // guard for negative-valuation denominators (1 - p^{gamma+m})
    int guard = 0;
    for (int m = 0; m < n_terms; ++m)
        if (eg + m * P < 0) guard -= eg + m * P;
    const int work = order + 2 * guard + 4;
    QSeries sum = QSeries::zero(work);
    QSeries term = QSeries::one();
    for (int m = 0; m < n_terms; ++m) {
        if (m > 0 && !term.is_zero() && term.valuation() >= work) break;
        sum += term.truncated(work);
        if (eg + m * P == 0)
            throw PolarArgument("(p^gamma;p)_n vanishes at n = " + std::to_string(m + 1));
        QSeries numer = one_minus(u_mono(ea + m * P)) * one_minus(u_mono(eb + m * P));
        QSeries denom = one_minus(u_mono(eg + m * P)) * one_minus(u_mono((m + 1) * P));
        if (numer.is_zero()) break;
        term = (term * numer * z * invert(denom, work + 2 * std::abs(denom.valuation()))).truncated(work);
    }
    return sum.truncated(order);
}

QSeries gamma_z(const QSeries& z, int n, int k, int order) {
    const int P = p_uexp(k);
    const QSeries q4 = u_mono(8), p = u_mono(P);
    auto dp = [&](int qexp) { return double_pochhammer(z.shifted(P + 2 * qexp), p, q4, order); };
    QSeries num = dp(1 - n) * dp(3 + n);
    QSeries den = dp(5 + n) * dp(-1 - n);
    return (num * invert(den, order)).truncated(order);
}

} // namespace rsos
