#include "rsos/face_weights.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "rsos/errors.hpp"
#include "rsos/ratfunc.hpp"

namespace rsos {

bool admissible(int k, int a, int b, int N) {
    if (a < 0 || a > k || b < 0 || b > k || N < 0) return false;
    const int d = a - b;
    if (d > N || d < -N || (N - d) % 2 != 0) return false;
    return a + b >= N && a + b <= 2 * k - N;
}

bool admissible(const WeightIndex& x, const WeightIndex& y, int N) {
    if (x.k != y.k) throw LevelMismatch("weights of level " + std::to_string(x.k) + " and " + std::to_string(y.k));
    return admissible(x.k, x.a, y.a, N);
}

bool face_admissible(const FaceConfig& c) {
    return admissible(c.k, c.lam, c.mu, c.m) && admissible(c.k, c.mup, c.nu, c.m) &&
           admissible(c.k, c.lam, c.mup, c.n) && admissible(c.k, c.mu, c.nu, c.n);
}

SeriesFraction WeightParts::full(int order) const {
    SeriesFraction f = integral;
    if (f.is_zero()) return f;
    if (h != 0) f.num = f.num.shifted(h);
    if (x != y) {
        f.num = f.num * sqrt(q_integer(x).to_series(order + 4 * x), order);
        f.den = f.den * sqrt(q_integer(y).to_series(order + 4 * y), order);
    }
    return f;
}

namespace {

QSeries um(int e) { return QSeries::monomial(Rational(1), e); }

// zeta^2 * u^{2 qexp} as a series, with zeta the spectral argument
QSeries z2_shift(const Spectral& z, int qexp) { return z.power(2).shifted(2 * qexp); }

Rational two_s(int k) { return Rational(1, k + 2); }

} // namespace

SeriesFraction w11_bar_fraction(int k, int a, int b, int c, int d, const Spectral& z, int order) {
    const int W = order + kWeightGuard;
    SeriesFraction f{QSeries::zero(W), QSeries::one()};
    if (!face_admissible(FaceConfig{k, a, b, c, d, 1, 1})) return f;
    const Rational s2 = two_s(k);
    const Rational rm = s2 * (a + 1), rp = 1 - rm;
    if (d == a + 2 || d == a - 2) return {QSeries::one(), QSeries::one()};
    if (d != a) throw InadmissibleConfig("unexpected (1,1) face");
    const QSeries th_q2z2 = theta_p(z2_shift(z, 2), k, W);
    if (b != c) {
        // B^{a+-}: (a, a+-1, a-+1, a) uses r_-+
        const Rational r = (b == a + 1) ? rm : rp;
        QSeries g = gamma_p_ratio(GammaRatioSpec{{r, r}, {s2 + r, r - s2}}, k, W);
        return {(g * theta_p(z.power(2), k, W)).shifted(2).truncated(W), th_q2z2};
    }
    // C^{a+-}: (a, a+-1, a+-1, a) uses r_+-
    const Rational r = (b == a + 1) ? rp : rm;
    const int er = static_cast<int>(Rational(r * p_uexp(k)).get_num().get_si());
    QSeries num = z.power(1) * theta_p(um(4), k, W) * theta_p(z.power(2).shifted(er), k, W);
    QSeries den = th_q2z2 * theta_p(um(er), k, W);
    return {num.truncated(W), den.truncated(W)};
}

QSeries w11_bar(int k, int a, int b, int c, int d, const Spectral& z, int order) {
    return w11_bar_fraction(k, a, b, c, d, z, order).value(order);
}

WeightParts conn_n1_parts(int k, int n, int lam, int mu, int mup, int nu, const Spectral& z, int order) {
    const int W = order + kWeightGuard;
    WeightParts out;
    out.integral = SeriesFraction{QSeries::zero(W), QSeries::one()};
    if (!face_admissible(FaceConfig{k, lam, mu, mup, nu, n, 1})) return out;
    const int j2 = mu + n - lam;
    if (j2 % 2 != 0 || j2 < 0 || j2 > 2 * n)
        throw NoValidJ("no j for C^(" + std::to_string(n) + ",1)(" + std::to_string(lam) + "," +
                       std::to_string(mu) + "," + std::to_string(mup) + "," + std::to_string(nu) + ")");
    const int j = j2 / 2;
    const int a = lam;
    const Rational s2 = two_s(k);
    const int P = p_uexp(k);
    const bool up = (mu == nu + 1);
    const bool upp = (mup == lam + 1);

    GammaRatioSpec g;
    QSeries pre = QSeries::one();
    int theta_qexp = 0;   // numerator theta argument q^{theta_qexp} zeta^2 (times p if theta_p_shift)
    int theta_ushift = 0; // extra u-exponent (p factor)
    if (up && upp) {
        if (j < 1) throw NoValidJ("[j] with j = 0 in a denominator");
        pre = z.power(1);
        out.h = n - 2 * j + 1;
        out.x = n - j + 1;
        out.y = j;
        g = {{s2 * (a + 2 * j - n), 1 - s2 * (a + 1)}, {1 + s2 * (j - 1 - n), s2 * j}};
        theta_qexp = -2 * (a + j) + n - 1;
        theta_ushift = P;
    } else if (up) {
        pre = um(2 * j);
        g = {{s2 * (a + 2 * j - n), s2 * (a + 1)}, {s2 * (a + j - n), s2 * (a + j + 1)}};
        theta_qexp = -2 * j + n + 1;
    } else if (upp) {
        pre = um(2 * (n - j));
        g = {{1 - s2 * (a + 2 * j - n + 2), 1 - s2 * (a + 1)}, {1 - s2 * (a + j + 2), 1 - s2 * (a + j + 1 - n)}};
        theta_qexp = 2 * j + 1 - n;
    } else {
        if (n - j < 1) throw NoValidJ("[n-j] with j = n in a denominator");
        pre = z.power(1);
        out.h = 2 * j - n + 1;
        out.x = j + 1;
        out.y = n - j;
        g = {{1 - s2 * (a + 2 * j - n + 2), s2 * (a + 1)}, {1 - s2 * (1 + j), s2 * (n - j)}};
        theta_qexp = 2 * a + 2 * j + 3 - n;
    }
    QSeries gamma = gamma_p_ratio(g, k, W);
    if (gamma.is_zero()) return out;
    const SeriesFraction eta_p = eta_fraction(z.power(2), n, k, W);
    const SeriesFraction eta_m = eta_fraction(z.power(-2), n, k, W);
    const SeriesFraction kap = kappa_fraction(n, 1, z, W);
    const QSeries th_num = theta_p(z2_shift(z, theta_qexp).shifted(theta_ushift), k, W);
    const QSeries th_den = theta_p(z2_shift(z, 1 + n), k, W);

    QSeries num = (pre * gamma).truncated(W);
    num = (num * th_num).truncated(W);
    num = (num * eta_p.num).truncated(W);
    num = (num * eta_m.den).truncated(W);
    num = (num * kap.den).truncated(W);
    QSeries den = (th_den * eta_p.den).truncated(W);
    den = (den * eta_m.num).truncated(W);
    den = (den * kap.num).truncated(W);
    out.integral = SeriesFraction{num, den};
    return out;
}

SeriesFraction conn_n1_fraction(int k, int n, int lam, int mu, int mup, int nu, const Spectral& z, int order) {
    return conn_n1_parts(k, n, lam, mu, mup, nu, z, order).full(order + kWeightGuard);
}

QSeries conn_n1(int k, int n, int lam, int mu, int mup, int nu, const Spectral& z, int order) {
    return conn_n1_fraction(k, n, lam, mu, mup, nu, z, order).value(order);
}

QSeries conn_1n(int k, int n, int lam, int mu, int mup, int nu, const Spectral& z, int order) {
    return conn_n1(k, n, nu, mu, mup, lam, z, order);
}

WeightParts face_weight_parts(const FaceConfig& c, const Spectral& z, int order) {
    if (c.n == 1) return conn_n1_parts(c.k, c.m, c.lam, c.mu, c.mup, c.nu, z, order);
    if (c.m == 1) return conn_n1_parts(c.k, c.n, c.nu, c.mu, c.mup, c.lam, z, order);
    throw UnsupportedFusion("W^(" + std::to_string(c.m) + "," + std::to_string(c.n) +
                            ") has no explicit formula");
}

SeriesFraction face_weight_fraction(const FaceConfig& c, const Spectral& z, int order) {
    return face_weight_parts(c, z, order).full(order + kWeightGuard);
}

QSeries face_weight(const FaceConfig& c, const Spectral& z, int order) {
    return face_weight_fraction(c, z, order).value(order);
}

QSeries crossing_G(const WeightIndex& lam, const WeightIndex& mu, int order) {
    if (lam.k != mu.k) throw LevelMismatch("crossing_G across levels");
    const int k = lam.k, a = lam.a;
    if (a < 0 || a > k || mu.a < 0 || mu.a > k || std::abs(mu.a - a) != 1)
        throw InvalidPair("G needs neighbouring weights, got " + std::to_string(a) + "," + std::to_string(mu.a));
    const Rational s2 = two_s(k);
    GammaRatioSpec g = (mu.a == a + 1) ? GammaRatioSpec{{1 - s2 * (a + 1)}, {1 - s2 * (a + 2)}}
                                       : GammaRatioSpec{{s2 * (a + 1)}, {s2 * a}};
    return gamma_p_ratio_free(g, k, order);
}

// ---------------------------------------------------------------- checks

namespace {

class WeightCache {
public:
    explicit WeightCache(int order) : order_(order) {}

    const QSeries& get(int k, int m, int n, int a, int b, int c, int d, const Spectral& z) {
        std::array<int, 10> key{k, m, n, a, b, c, d, z.sign, z.uexp, z.zexp};
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        QSeries v = face_weight(FaceConfig{k, a, b, c, d, m, n}, z, order_ + kWeightGuard / 2);
        return cache_.emplace(key, std::move(v)).first->second;
    }

private:
    int order_;
    std::map<std::array<int, 10>, QSeries> cache_;
};

bool close_enough(const QSeries& a, const QSeries& b, int bound) {
    return a.order() >= bound && b.order() >= bound && a.agrees_with(b, bound);
}

std::string tuple_str(std::initializer_list<int> v) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (int x : v) {
        if (!first) os << ",";
        os << x;
        first = false;
    }
    os << ")";
    return os.str();
}

} // namespace

CheckReport check_ybe(int m, int n, int l, int k, std::array<int, 3> e, int order,
                      const std::vector<std::array<int, 6>>& boundaries) {
    auto supported = [](int x, int y) { return x == 1 || y == 1; };
    if (!supported(n, l) || !supported(m, n) || !supported(m, l))
        throw UnsupportedFusion("YBE labels (" + std::to_string(m) + "," + std::to_string(n) + "," +
                                std::to_string(l) + ")");
    CheckReport rep;
    WeightCache cache(order);
    const Spectral z12{1, 0, e[0] - e[1]}, z23{1, 0, e[1] - e[2]}, z13{1, 0, e[0] - e[2]};
    std::vector<std::array<int, 6>> all = boundaries;
    if (all.empty()) {
        for (int i = 0; i < (k + 1) * (k + 1) * (k + 1) * (k + 1) * (k + 1) * (k + 1); ++i) {
            std::array<int, 6> b{};
            int r = i;
            for (auto& x : b) {
                x = r % (k + 1);
                r /= k + 1;
            }
            all.push_back(b);
        }
    }
    for (const auto& [al, be, ga, de, mu, la] : all) {
        QSeries lhs = QSeries::zero(), rhs = QSeries::zero();
        for (int nu = 0; nu <= k; ++nu) {
            const QSeries& w1 = cache.get(k, n, l, al, nu, mu, la, z23);
            if (!w1.is_zero()) {
                const QSeries& w2 = cache.get(k, m, n, al, be, nu, ga, z12);
                const QSeries& w3 = cache.get(k, m, l, nu, ga, la, de, z13);
                if (!w2.is_zero() && !w3.is_zero()) lhs += (w1 * w2).truncated(order + 4) * w3;
            }
            const QSeries& v1 = cache.get(k, m, l, al, be, mu, nu, z13);
            if (!v1.is_zero()) {
                const QSeries& v2 = cache.get(k, m, n, mu, nu, la, de, z12);
                const QSeries& v3 = cache.get(k, n, l, be, ga, nu, de, z23);
                if (!v2.is_zero() && !v3.is_zero()) rhs += (v1 * v2).truncated(order + 4) * v3;
            }
        }
        ++rep.checked;
        if (!close_enough(lhs.truncated(order), rhs.truncated(order), order) &&
            !(lhs.is_zero() && rhs.is_zero()))
            rep.fail("YBE boundary " + tuple_str({al, be, ga, de, mu, la}) + ": " + lhs.to_string() + " vs " +
                     rhs.to_string());
    }
    return rep;
}

CheckReport check_inversion(int m, int n, int k, int order) {
    CheckReport rep;
    WeightCache cache(order);
    const Spectral z{1, 0, 1}, zi{1, 0, -1};
    for (int la = 0; la <= k; ++la)
        for (int nu = 0; nu <= k; ++nu)
            for (int mu = 0; mu <= k; ++mu)
                for (int al = 0; al <= k; ++al) {
                    auto ok_mid = [&](int x) { return admissible(k, la, x, m) && admissible(k, x, nu, n); };
                    if (!ok_mid(mu) || !ok_mid(al)) continue;
                    QSeries sum = QSeries::zero();
                    for (int mp = 0; mp <= k; ++mp) {
                        const QSeries& a = cache.get(k, m, n, la, mu, mp, nu, z);
                        if (a.is_zero()) continue;
                        const QSeries& b = cache.get(k, n, m, la, mp, al, nu, zi);
                        if (!b.is_zero()) sum += a * b;
                    }
                    ++rep.checked;
                    QSeries expect = (mu == al) ? QSeries::one() : QSeries::zero();
                    if (!close_enough(sum.truncated(order), expect, order))
                        rep.fail("inversion " + tuple_str({la, mu, al, nu}) + ": " + sum.to_string());
                }
    return rep;
}

CheckReport check_symmetry(int n, int k, int order) {
    CheckReport rep;
    const Spectral z{};
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b)
            for (int c = 0; c <= k; ++c)
                for (int d = 0; d <= k; ++d) {
                    FaceConfig f{k, a, b, c, d, n, 1}, g{k, d, b, c, a, 1, n};
                    if (face_admissible(f) != face_admissible(g)) {
                        rep.fail("admissibility differs at " + tuple_str({a, b, c, d}));
                        continue;
                    }
                    if (!face_admissible(f)) continue;
                    ++rep.checked;
                    if (!close_enough(face_weight(f, z, order), face_weight(g, z, order), order))
                        rep.fail("W^(n,1) vs W^(1,n) at " + tuple_str({a, b, c, d}));
                }
    return rep;
}

CheckReport check_crossing(int n, int k, int order) {
    CheckReport rep;
    const Spectral crossed{-1, -2, 1}, inv{1, 0, -1};
    std::map<std::pair<int, int>, QSeries> gcache;
    auto G = [&](int a, int b) -> const QSeries& {
        auto it = gcache.find({a, b});
        if (it == gcache.end())
            it = gcache.emplace(std::make_pair(a, b), crossing_G({k, a}, {k, b}, order + kWeightGuard)).first;
        return it->second;
    };
    for (int la = 0; la <= k; ++la)
        for (int mu = 0; mu <= k; ++mu)
            for (int mup = 0; mup <= k; ++mup)
                for (int nu = 0; nu <= k; ++nu) {
                    FaceConfig f{k, la, mu, mup, nu, n, 1};
                    FaceConfig g{k, mup, la, nu, mu, 1, n};
                    const bool fa = face_admissible(f), ga = face_admissible(g);
                    if (fa != ga) {
                        rep.fail("crossed admissibility differs at " + tuple_str({la, mu, mup, nu}));
                        continue;
                    }
                    if (!fa) continue;
                    ++rep.checked;
                    SeriesFraction lhs = face_weight_fraction(f, crossed, order);
                    SeriesFraction rhs = face_weight_fraction(g, inv, order);
                    QSeries ratio = G(la, mup) / G(mu, nu);
                    rhs.num = rhs.num * ratio;
                    if (!lhs.equals(rhs, order))
                        rep.fail("crossing at " + tuple_str({la, mu, mup, nu}));
                }
    return rep;
}

// ---------------------------------------------------------------- numerics

namespace {

// Evaluates a series with only even u-exponents at real q.
long double eval_in_q(const QSeries& s, long double q, long double zeta, long double* tail) {
    long double v = 0, last = 0;
    for (int e = s.valuation(); e < s.end_exponent(); ++e) {
        const ZetaPoly c = s.coeff(e);
        if (c.is_zero()) continue;
        if (e % 2 != 0) throw std::logic_error("odd u-exponent in an integral weight part");
        long double t = c.evaluate(zeta) * std::pow(q, e / 2);
        v += t;
        if (e + 8 >= s.end_exponent()) last = std::max(last, std::fabs(t));
    }
    if (tail) *tail = last;
    return v;
}

long double q_int_value(int n, long double q) { return (std::pow(q, n) - std::pow(q, -n)) / (q - 1 / q); }

} // namespace

ScanResult numeric_max_scan(int n, int k, long double q, long double zeta, int order) {
    if (!(q < 0 && -q < 1 / zeta && 1 / zeta < 1))
        throw RegimeViolation("need 0 < -q < 1/zeta < 1");
    ScanResult res;
    auto ground = [&](const FaceConfig& c) {
        for (int i = 0; i <= 1; ++i)
            for (int b = 0; b < k; ++b)
                for (int bp = 0; bp < k; ++bp)
                    if (admissible(k - 1, b, bp, n - 1) && c.lam == bp + i && c.mu == b + 1 - i &&
                        c.mup == bp + 1 - i && c.nu == b + i)
                        return true;
        return false;
    };
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b)
            for (int c = 0; c <= k; ++c)
                for (int d = 0; d <= k; ++d) {
                    FaceConfig f{k, a, b, c, d, n, 1};
                    if (!face_admissible(f)) continue;
                    WeightParts parts = face_weight_parts(f, Spectral{}, order);
                    QSeries integral = parts.integral.value(order);
                    long double tail = 0;
                    long double v = eval_in_q(integral, q, zeta, &tail);
                    if (parts.h != 0 || parts.x != parts.y) {
                        long double r = std::pow(q, parts.h) * q_int_value(parts.x, q) / q_int_value(parts.y, q);
                        if (r < 0) throw RegimeViolation("half-integer prefactor is not real at this q");
                        v *= std::sqrt(r);
                        tail *= std::sqrt(r);
                    }
                    res.ranked.push_back({f, v, tail, ground(f)});
                }
    std::sort(res.ranked.begin(), res.ranked.end(),
              [](const RankedWeight& x, const RankedWeight& y) { return x.value > y.value; });
    long double min_ground = INFINITY, max_other = -INFINITY;
    bool any_ground = false;
    for (const auto& r : res.ranked) {
        if (r.ground_pattern) {
            any_ground = true;
            min_ground = std::min(min_ground, r.value);
        } else {
            max_other = std::max(max_other, r.value);
        }
    }
    res.maxima_match = any_ground && min_ground > max_other;
    return res;
}

// ---------------------------------------------------------------- named weights

std::vector<NamedWeight> named_21_weights() {
    auto cfg = [](int a, int b, int c, int d) { return FaceConfig{3, a, b, c, d, 2, 1}; };
    return {
        {"A", cfg(0, 2, 1, 3), cfg(3, 1, 2, 0)},
        {"B^e_12", cfg(1, 1, 2, 2), cfg(2, 2, 1, 1)},
        {"B^d_12", cfg(1, 3, 0, 2), cfg(2, 0, 3, 1)},
        {"C^e_10", cfg(1, 1, 2, 0), cfg(2, 2, 1, 3)},
        {"C^e_12", cfg(1, 1, 0, 2), cfg(2, 2, 3, 1)},
        {"C^d_01", cfg(0, 2, 1, 1), cfg(3, 1, 2, 2)},
        {"C^d_12", cfg(1, 3, 2, 2), cfg(2, 0, 1, 1)},
    };
}

std::vector<std::vector<Rational>> linear_relations(const std::vector<QSeries>& s, int bound) {
    const std::size_t ncol = s.size();
    std::vector<std::vector<Rational>> rows;
    int lo = bound;
    for (const auto& x : s) lo = std::min(lo, x.valuation());
    for (int e = lo; e < bound; ++e) {
        std::map<int, std::vector<Rational>> byz;
        for (std::size_t c = 0; c < ncol; ++c) {
            const ZetaPoly ce = s[c].coeff(e);
            for (const auto& [z, v] : ce.terms()) {
                auto& row = byz[z];
                row.resize(ncol, Rational(0));
                row[c] = v;
            }
        }
        for (auto& [z, row] : byz) rows.push_back(row);
    }
    // reduced row echelon form
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncol && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t t = 0; t < ncol; ++t) rows[i][t] -= f * rows[r][t];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < ncol; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
        std::vector<Rational> v(ncol, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[static_cast<std::size_t>(pivot_col[i])] = -rows[i][free];
        basis.push_back(v);
    }
    return basis;
}

} // namespace rsos
