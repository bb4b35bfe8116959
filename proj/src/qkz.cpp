#include "rsos/qkz.hpp"

#include <algorithm>
#include <stdexcept>

#include "rsos/errors.hpp"
#include "rsos/face_weights.hpp"

namespace rsos {

namespace {

QSeries u_mono(int e) { return QSeries::monomial(Rational(1), e); }
QSeries one_minus_u(int e) { return QSeries::one() - u_mono(e); }

// p^x as a u-exponent
int p_exp(const Rational& x, int k) {
    Rational e = x * p_uexp(k);
    if (e.get_den() != 1) throw std::invalid_argument("p^" + x.get_str() + " is not a power of u");
    return static_cast<int>(e.get_num().get_si());
}

Rational frac(int num, int k) { return Rational(num, k + 2); }

// (1 - u^ne) / (1 - u^de); zero when the numerator vanishes
QSeries ratio(int ne, int de, int order) {
    if (ne == 0) return QSeries::zero(order);
    if (de == 0) throw PolarArgument("prefactor denominator vanishes");
    return (one_minus_u(ne) * invert(one_minus_u(de), order + 2 * std::abs(de) + 4)).truncated(order);
}

std::string vlabel(int n, int j) { return "v^(" + std::to_string(n) + ")_" + std::to_string(j); }

void check_arg(const QSeries& z) {
    if (!z.is_zero() && z.valuation() <= 0)
        throw DivergentProduct("hypergeometric argument needs positive valuation in u");
}

int terms_for(int order) { return 4 * order + 16; }

} // namespace

std::string to_string(PsiCase c) {
    switch (c) {
    case PsiCase::mu_plus: return "mu+";
    case PsiCase::mu_minus: return "mu-";
    case PsiCase::nu_plus: return "nu+";
    case PsiCase::nu_minus: return "nu-";
    }
    return "?";
}

PsiCase parse_psi_case(const std::string& s) {
    if (s == "mu+") return PsiCase::mu_plus;
    if (s == "mu-") return PsiCase::mu_minus;
    if (s == "nu+") return PsiCase::nu_plus;
    if (s == "nu-") return PsiCase::nu_minus;
    throw std::invalid_argument("unknown case '" + s + "' (expected mu+, mu-, nu+ or nu-)");
}

PsiWeights psi_weights(const MatrixElementSpec& s) {
    PsiWeights w;
    w.lam = s.a;
    switch (s.kind) {
    case PsiCase::mu_plus:
        w.mu = s.a + 1;
        w.nu = w.mu - s.n + 2 * s.j;
        break;
    case PsiCase::mu_minus:
        w.mu = s.a - 1;
        w.nu = w.mu - s.n + 2 * s.j;
        break;
    case PsiCase::nu_plus:
        w.mu = s.a - s.n + 2 * s.j;
        w.nu = w.mu + 1;
        break;
    case PsiCase::nu_minus:
        w.mu = s.a - s.n + 2 * s.j;
        w.nu = w.mu - 1;
        break;
    }
    return w;
}

int determine_j(int k, int n, PsiCase kind, int a, int nu) {
    int found = -1;
    for (int j = 0; j <= n; ++j) {
        MatrixElementSpec s{k, n, kind, a, j};
        if (psi_weights(s).nu != nu) continue;
        if (found >= 0) throw NoValidJ("j is not unique");
        found = j;
    }
    if (found < 0) throw NoValidJ("no j in [0, " + std::to_string(n) + "] reaches nu = " + std::to_string(nu));
    return found;
}

void validate(const MatrixElementSpec& s) {
    if (s.k < 1 || s.n < 1) throw InadmissibleConfig("need k >= 1 and n >= 1");
    if (s.j < 0 || s.j > s.n) throw NoValidJ("j = " + std::to_string(s.j) + " outside [0, n]");
    PsiWeights w = psi_weights(s);
    const bool first_is_n = s.kind == PsiCase::nu_plus || s.kind == PsiCase::nu_minus;
    const int n1 = first_is_n ? s.n : 1, n2 = first_is_n ? 1 : s.n;
    if (!admissible(s.k, w.lam, w.mu, n1) || !admissible(s.k, w.mu, w.nu, n2))
        throw InadmissibleConfig("weights (" + std::to_string(w.lam) + ", " + std::to_string(w.mu) + ", " +
                                 std::to_string(w.nu) + ") are not admissible at level " + std::to_string(s.k));
}

std::vector<MatrixElementSpec> valid_specs(int k, int n) {
    std::vector<MatrixElementSpec> out;
    for (PsiCase c : {PsiCase::mu_plus, PsiCase::mu_minus, PsiCase::nu_plus, PsiCase::nu_minus})
        for (int a = 0; a <= k; ++a)
            for (int j = 0; j <= n; ++j) {
                MatrixElementSpec s{k, n, c, a, j};
                try {
                    validate(s);
                    out.push_back(s);
                } catch (const Error&) {
                }
            }
    return out;
}

PhiParams psi_params(const MatrixElementSpec& s) {
    const int k = s.k, n = s.n, a = s.a, j = s.j;
    switch (s.kind) {
    case PsiCase::mu_plus: return {frac(-(1 + j), k), frac(a + 1 - n + j, k), frac(a + 1, k)};
    case PsiCase::mu_minus: return {frac(-n + j - 1, k), 1 - frac(a + j + 1, k), 1 - frac(a + 1, k)};
    case PsiCase::nu_plus: return {frac(-(1 + j), k), 1 - frac(a + j + 2, k), 1 - frac(a - n + 2 * j + 2, k)};
    case PsiCase::nu_minus: return {frac(-n + j - 1, k), frac(a - n + j, k), frac(a - n + 2 * j, k)};
    }
    throw std::logic_error("bad case");
}

QSeries psi_prefactor(const MatrixElementSpec& s, const QSeries& z, int order) {
    const int P = p_uexp(s.k), n = s.n, a = s.a, j = s.j;
    switch (s.kind) {
    case PsiCase::mu_plus:
        return ratio(4 * (j - n), 4 * (a + 1), order).shifted(2 * (2 * (a + 1) + n - j));
    case PsiCase::mu_minus: {
        const int shift = P + 2 * (-2 * (a + 1) + j);
        QSeries r = ratio(-4 * j, P - 4 * (a + 1), order - shift);
        return (z * r.shifted(shift)).truncated(order);
    }
    case PsiCase::nu_plus: {
        const int shift = 2 * (j - n);
        QSeries r = ratio(4 * (n - j), -P + 4 * (a + 2 - n + 2 * j), order - shift);
        return (z * r.shifted(shift)).truncated(order);
    }
    case PsiCase::nu_minus:
        return ratio(4 * j, -4 * (a - n + 2 * j), order + 2 * j).shifted(-2 * j).truncated(order);
    }
    throw std::logic_error("bad case");
}

PsiElement psi_element(const MatrixElementSpec& s, const QSeries& z, int order) {
    if (s.j < 0 || s.j > s.n) throw NoValidJ("j = " + std::to_string(s.j) + " outside [0, n]");
    const int P = p_uexp(s.k), n = s.n, j = s.j;
    PsiElement e;
    switch (s.kind) {
    case PsiCase::mu_plus:
        e.first_basis = vlabel(n, j) + " (x) " + vlabel(1, 1);
        e.second_basis = vlabel(n, j + 1) + " (x) " + vlabel(1, 0);
        break;
    case PsiCase::mu_minus:
        e.first_basis = vlabel(n, j) + " (x) " + vlabel(1, 0);
        e.second_basis = vlabel(n, j - 1) + " (x) " + vlabel(1, 1);
        break;
    case PsiCase::nu_plus:
        e.first_basis = vlabel(1, 1) + " (x) " + vlabel(n, j);
        e.second_basis = vlabel(1, 0) + " (x) " + vlabel(n, j + 1);
        break;
    case PsiCase::nu_minus:
        e.first_basis = vlabel(1, 0) + " (x) " + vlabel(n, j);
        e.second_basis = vlabel(1, 1) + " (x) " + vlabel(n, j - 1);
        break;
    }
    PhiParams ph = psi_params(s);
    QSeries pref = psi_prefactor(s, z, order + 16);
    const int guard = pref.is_zero() ? 0 : std::max(0, -pref.valuation());
    const int work = order + guard + 4;
    QSeries w = z.shifted(P + 2 * (1 + n));
    check_arg(w);
    QSeries g = gamma_z(z, n, s.k, work);
    e.first = (g * phi21(ph.alpha, ph.beta, ph.gamma, w, s.k, terms_for(work), work)).truncated(order);
    if (pref.is_zero()) {
        e.second = QSeries::zero(order);
    } else {
        QSeries phi2 = phi21(ph.alpha + 1, ph.beta, ph.gamma + 1, w, s.k, terms_for(work), work);
        e.second = (g * pref * phi2).truncated(order);
    }
    return e;
}

namespace {

struct ContiguitySides {
    QSeries lhs, rhs;
};

// Both sides of a contiguity relation given phi(z), phi(pz), phi'(z), phi'(pz).
ContiguitySides contiguity_sides(int identity, const PhiParams& ph, const QSeries& z, int k, const QSeries& f,
                                 const QSeries& fp, const QSeries& g, const QSeries& gp, int work) {
    const int ea = p_exp(ph.alpha, k), eb = p_exp(ph.beta, k), ec = p_exp(ph.gamma, k);
    const QSeries one = QSeries::one();
    if (ec == 0) throw PolarArgument("1 - p^gamma vanishes");
    QSeries common = (one - u_mono(ea)) * invert(one_minus_u(ec), work + 2 * std::abs(ec) + 4);
    ContiguitySides s;
    if (identity == 1) {
        s.lhs = (one - z.shifted(ea)) * fp - (one - z) * f;
        s.rhs = z * (u_mono(eb) - u_mono(ec)) * common * gp;
    } else if (identity == 2) {
        s.lhs = (one - z.shifted(ea + eb - ec)) * fp - (one - z.shifted(eb - ec)) * f;
        s.rhs = -(z * (one - u_mono(eb - ec)) * common * g);
    } else {
        throw std::invalid_argument("contiguity identity must be 1 or 2");
    }
    return s;
}

bool sides_agree(const ContiguitySides& s, int order) {
    return s.lhs.order() >= order && s.rhs.order() >= order && s.lhs.agrees_with(s.rhs, order);
}

int contiguity_work(const PhiParams& ph, int k, int order) {
    const int ea = p_exp(ph.alpha, k), eb = p_exp(ph.beta, k), ec = p_exp(ph.gamma, k);
    const int loss = std::max(0, -ea) + std::max(0, ec - eb) + std::max(0, ec - ea - eb);
    return order + loss + 8;
}

} // namespace

bool contiguity_check(int identity, const Rational& alpha, const Rational& beta, const Rational& gamma,
                      const QSeries& z, int k, int order) {
    if (identity != 1 && identity != 2) throw std::invalid_argument("contiguity identity must be 1 or 2");
    check_arg(z);
    const PhiParams ph{alpha, beta, gamma};
    const int work = contiguity_work(ph, k, order);
    const QSeries zp = z.shifted(p_uexp(k));
    auto phi = [&](const Rational& a, const Rational& c, const QSeries& x) {
        return phi21(a, beta, c, x, k, terms_for(work), work);
    };
    QSeries f = phi(alpha, gamma, z), fp = phi(alpha, gamma, zp);
    QSeries g = phi(alpha + 1, gamma + 1, z), gp = phi(alpha + 1, gamma + 1, zp);
    return sides_agree(contiguity_sides(identity, ph, z, k, f, fp, g, gp, work), order);
}

bool qkz_shift_check(const MatrixElementSpec& s, int order) {
    const int P = p_uexp(s.k);
    const PhiParams ph = psi_params(s);
    const int work = contiguity_work(ph, s.k, order) + 8;
    const QSeries z = QSeries::monomial(Rational(1), 0, 2);
    const QSeries zp = z.shifted(P);
    PsiElement e = psi_element(s, z, work), ep = psi_element(s, zp, work);
    QSeries pref = psi_prefactor(s, z, work), prefp = psi_prefactor(s, zp, work);
    if (pref.is_zero()) return e.second.is_zero() && ep.second.is_zero();

    // strip gamma(z) and the prefactor to recover the two series
    QSeries gi = invert(gamma_z(z, s.n, s.k, work), work), gpi = invert(gamma_z(zp, s.n, s.k, work), work);
    const int pv = std::abs(pref.valuation()) + std::abs(prefp.valuation());
    QSeries f = (e.first * gi).truncated(work), fp = (ep.first * gpi).truncated(work);
    QSeries g = (e.second * gi * invert(pref, work + 2 * pv)).truncated(work - pv);
    QSeries gp = (ep.second * gpi * invert(prefp, work + 2 * pv)).truncated(work - pv);

    const QSeries w = z.shifted(P + 2 * (1 + s.n));
    for (int id : {1, 2})
        if (!sides_agree(contiguity_sides(id, ph, w, s.k, f, fp, g, gp, work), order)) return false;
    return true;
}

} // namespace rsos
