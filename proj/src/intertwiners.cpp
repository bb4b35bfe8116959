#include "rsos/intertwiners.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "rsos/errors.hpp"
#include "rsos/face_weights.hpp"

namespace rsos {

namespace {

int degree_of(const TensorKey& k, std::size_t hw_legs) {
    int d = 0;
    for (std::size_t l = 0; l < hw_legs; ++l) d += static_cast<int>(k.legs[l].size());
    return d;
}

// Rows of a linear system indexed by (equation label, basis key).
struct System {
    explicit System(std::size_t n) : ncols(n) {}
    std::size_t ncols;
    std::map<std::pair<int, TensorKey>, std::size_t> index;
    RMatrix rows;
    RVector rhs;

    std::size_t row(int label, const TensorKey& k) {
        auto [it, ins] = index.emplace(std::make_pair(label, k), rows.size());
        if (ins) {
            rows.emplace_back(ncols, RatFunc(0));
            rhs.emplace_back(0);
        }
        return it->second;
    }
    void add_row(RVector r, const RatFunc& b) {
        rows.push_back(std::move(r));
        rhs.push_back(b);
    }
    LinearSolution solve_all() const { return solve(rows, rhs, static_cast<int>(ncols)); }
};

TensorElement shift_zeta(const TensorElement& x, int dz) {
    TensorElement out;
    for (const auto& [k, c] : x) {
        TensorKey key = k;
        key.zexp += dz;
        out.emplace(std::move(key), c);
    }
    return out;
}

std::string pair_name(WeightIndex a, WeightIndex b) {
    return "(" + std::to_string(a.k) + "," + std::to_string(a.a) + ")->(" + std::to_string(b.k) + "," +
           std::to_string(b.a) + ")";
}

} // namespace

SurdCoeff IntertwinerExpansion::u_coefficient(const Word& w, int j, int zexp) const {
    auto it = image.find(TensorKey{{w, eval_leg(j)}, zexp});
    if (it == image.end()) return SurdCoeff{RatFunc(0), RatFunc(1)};
    return SurdCoeff{it->second, radicand_base / c_squared(target_eval, j)};
}

TensorElement IntertwinerExpansion::degree_part(int d) const {
    TensorElement out;
    for (const auto& [k, c] : image)
        if (static_cast<int>(k.legs[0].size()) == d) out.emplace(k, c);
    return out;
}

TensorElement IntertwinerExpansion::rational_image() const {
    if (!radicand_base.is_one())
        throw UnsupportedFusion("normalization of " + pair_name(source, target) + " is not rational");
    return image;
}

IntertwinerExpansion type1_expand(WeightIndex lam, WeightIndex lamp, int N, int max_degree) {
    if (lam.k != lamp.k || N < 1 || !admissible(lam, lamp, N))
        throw InadmissiblePair(pair_name(lam, lamp) + " is not " + std::to_string(N) + "-admissible");
    const int j0 = (lamp.a + N - lam.a) / 2;
    IntertwinerExpansion out;
    out.source = lam;
    out.target = lamp;
    out.target_eval = N;
    out.max_degree = max_degree;
    out.factors = {hw_factor(lamp, max_degree + 1), eval_factor(N)};
    out.radicand_base = c_squared(N, j0);
    const TensorSpace sp(out.factors);
    const HWModule& m = *out.factors[0].hw;

    std::vector<TensorKey> unknowns;
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& w : m.basis(d))
            for (int j = 0; j <= N; ++j) {
                TensorKey k{{w, eval_leg(j)}, d};
                if (sp.h_of(1, k) == lam.h1() && sp.h_of(0, k) == lam.h0()) unknowns.push_back(std::move(k));
            }
    System sys(unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        for (int i : {0, 1})
            for (const auto& [key, c] : sp.reduce(sp.e(i, TensorElement{{unknowns[u], RatFunc(1)}})))
                if (degree_of(key, 1) < max_degree) sys.rows[sys.row(i, key)][u] += c;
    RVector norm(unknowns.size(), RatFunc(0));
    const TensorKey lead{{"", eval_leg(j0)}, 0};
    norm[std::find(unknowns.begin(), unknowns.end(), lead) - unknowns.begin()] = RatFunc(1);
    sys.add_row(std::move(norm), RatFunc(1));

    const LinearSolution s = sys.solve_all();
    if (s.status == SolveStatus::none) throw NoSolution("type 1 intertwiner " + pair_name(lam, lamp));
    if (s.status == SolveStatus::multiple)
        throw NonUniqueSolution("type 1 intertwiner " + pair_name(lam, lamp));
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        if (!s.x[u].is_zero()) out.image.emplace(unknowns[u], s.x[u]);
    return out;
}

std::vector<IntertwinerExpansion> type2_solve(WeightIndex lam, int N, int max_degree) {
    if (N < 1) throw UnsupportedFusion("source spin must be positive");
    const int M = N + lam.k;
    const WeightIndex tgt = lam.sigma();
    std::vector<Factor> factors{hw_factor(tgt, max_degree + 1), eval_factor(M)};
    const TensorSpace sp(factors);
    const HWModule& m = *factors[0].hw;

    // the leading term of u_N (x) v_lam is v_{sigma lam} (x) u_{j0}
    const int two_j0 = tgt.a + M - (lam.a - N);
    if (two_j0 % 2 || two_j0 < 0 || two_j0 > 2 * M) throw UnsupportedFusion("no leading term");
    const int j0 = two_j0 / 2;

    struct Unknown {
        int i;
        TensorKey key;
    };
    std::vector<Unknown> unknowns;
    std::map<std::pair<int, TensorKey>, std::size_t> col;
    for (int i = 0; i <= N; ++i) {
        const int h1 = lam.a + N - 2 * i;
        for (int d = 0; d <= max_degree; ++d)
            for (const auto& w : m.basis(d))
                for (int j = 0; j <= M; ++j) {
                    TensorKey k{{w, eval_leg(j)}, d};
                    if (sp.h_of(1, k) != h1 || sp.h_of(0, k) != lam.k - h1) continue;
                    col.emplace(std::make_pair(i, k), unknowns.size());
                    unknowns.push_back({i, std::move(k)});
                }
    }
    System sys(unknowns.size());
    // Equation labels: 10*i + 2*l for e_l, 10*i + 2*l + 1 for f_l.
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
        const auto& [iu, ku] = unknowns[u];
        const TensorElement basis{{ku, RatFunc(1)}};
        for (int l : {0, 1}) {
            // e_l Phi(w_i (x) v) = Phi(e_l w_i (x) v)
            for (const auto& [key, c] : sp.reduce(sp.e(l, basis)))
                if (degree_of(key, 1) < max_degree) sys.rows[sys.row(10 * iu + 2 * l, key)][u] += c;
            for (int i = 0; i <= N; ++i)
                for (const auto& t : eval_action_w({GenKind::e, l}, N, i)) {
                    if (t.j != iu) continue;
                    TensorKey key = ku;
                    key.zexp += t.zexp;
                    if (degree_of(key, 1) < max_degree) sys.rows[sys.row(10 * i + 2 * l, key)][u] -= t.coeff;
                }
            // f_l Phi(w_i (x) v) = Phi(f_l w_i (x) v) when f_l v_lam = 0
            const int h = l == 0 ? lam.h0() : lam.h1();
            if (h != 0) continue;
            for (const auto& [key, c] : sp.reduce(sp.f(l, basis)))
                if (degree_of(key, 1) <= max_degree) sys.rows[sys.row(10 * iu + 2 * l + 1, key)][u] += c;
            for (int i = 0; i <= N; ++i)
                for (const auto& t : eval_action_w({GenKind::f, l}, N, i)) {
                    if (t.j != iu) continue;
                    TensorKey key = ku;
                    key.zexp += t.zexp;
                    if (degree_of(key, 1) <= max_degree)
                        sys.rows[sys.row(10 * i + 2 * l + 1, key)][u] -= t.coeff;
                }
        }
    }
    RVector norm(unknowns.size(), RatFunc(0));
    auto lead = col.find(std::make_pair(N, TensorKey{{"", eval_leg(j0)}, 0}));
    if (lead == col.end()) throw NoSolution("leading term outside the weight space");
    norm[lead->second] = RatFunc(1);
    sys.add_row(std::move(norm), RatFunc(1));

    const LinearSolution s = sys.solve_all();
    const std::string what = "type 2 intertwiner at " + pair_name(lam, tgt);
    if (s.status == SolveStatus::none) throw NoSolution(what);
    if (s.status == SolveStatus::multiple) throw NonUniqueSolution(what);

    std::vector<IntertwinerExpansion> out(N + 1);
    for (int i = 0; i <= N; ++i) {
        auto& x = out[i];
        x.source = lam;
        x.target = tgt;
        x.source_eval = N;
        x.source_index = i;
        x.target_eval = M;
        x.max_degree = max_degree;
        x.factors = factors;
        x.radicand_base = c_squared(N, i) * c_squared(M, j0) / c_squared(N, N);
    }
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        if (!s.x[u].is_zero()) out[unknowns[u].i].image.emplace(unknowns[u].key, s.x[u]);
    return out;
}

IntertwinerExpansion type2_expand(WeightIndex lam, int N, int i, int max_degree) {
    if (i < 0 || i > N) throw InadmissibleConfig("u_" + std::to_string(i) + " outside spin " + std::to_string(N));
    return type2_solve(lam, N, max_degree)[i];
}

bool type1_intertwines(const IntertwinerExpansion& x) {
    const TensorSpace sp(x.factors);
    const int top = x.max_degree;
    for (int i : {0, 1}) {
        for (const auto& [k, c] : sp.reduce(sp.e(i, x.image)))
            if (degree_of(k, 1) < top) return false;
        for (const auto& [k, c] : x.image)
            if (sp.h_of(i, k) != (i == 0 ? x.source.h0() : x.source.h1())) return false;
        const int h = i == 0 ? x.source.h0() : x.source.h1();
        if (h != 0) continue;
        for (const auto& [k, c] : sp.reduce(sp.f(i, x.image)))
            if (degree_of(k, 1) <= top) return false;
    }
    return true;
}

namespace {

// Solves lhs = sum_{lam'} sum_i c_i (beta_i (x) 1) Phi_lam^{lam' V^{(N)}}(v_lam)
// with beta_i(F v_lam') = Delta(F) omega_i, omega_i running over the basis
// of Omega_{A,B;lam'}. Keys of lhs have legs (A, B, eval) and zexp counted
// from a source of degree d0.
std::map<int, std::vector<OmegaTerm>> match_on_omega(const TensorElement& lhs, WeightIndex A, WeightIndex B,
                                                     WeightIndex lam, int N, int d0, int D) {
    const TensorSpace pair({hw_factor(A, D + 1), hw_factor(B, D + 1)});
    struct Column {
        int lamp;
        const OmegaVector* omega;
        TensorElement image;
    };
    std::map<int, std::vector<OmegaVector>> bases;
    std::vector<Column> cols;
    for (int lp = 0; lp <= lam.k; ++lp) {
        if (!admissible(lam.k, lam.a, lp, N)) continue;
        try {
            bases[lp] = omega_basis(A, B, lp, D);
        } catch (const EmptySpace&) {
            continue;
        }
    }
    for (auto& [lp, basis] : bases) {
        const TensorElement phi = type1_expand(lam, {lam.k, lp}, N, D).rational_image();
        for (const auto& om : basis) {
            Column c{lp, &om, {}};
            for (const auto& [pk, pc] : phi) {
                const Word& b = pk.legs[0];
                if (static_cast<int>(b.size()) + om.degree > D) continue;
                for (const auto& [k2, c2] : pair.reduce(pair.apply_word(b, om.vec))) {
                    TensorKey key{{k2.legs[0], k2.legs[1], pk.legs[1]}, pk.zexp + om.degree - d0};
                    add_to(c.image, key, c2 * pc);
                }
            }
            cols.push_back(std::move(c));
        }
    }
    System sys(cols.size());
    for (std::size_t u = 0; u < cols.size(); ++u)
        for (const auto& [k, c] : cols[u].image)
            if (degree_of(k, 2) <= D) sys.rows[sys.row(0, k)][u] += c;
    for (const auto& [k, c] : lhs)
        if (degree_of(k, 2) <= D) sys.rhs[sys.row(0, k)] += c;
    const LinearSolution s = sys.solve_all();
    if (s.status == SolveStatus::none) throw InconsistentSystem("matching on Omega has no solution");
    if (s.status == SolveStatus::multiple) throw NonUniqueSolution("matching on Omega is underdetermined");
    std::map<int, std::vector<OmegaTerm>> out;
    for (const auto& [lp, basis] : bases) out[lp];
    for (std::size_t u = 0; u < cols.size(); ++u)
        out[cols[u].lamp].push_back({*cols[u].omega, s.x[u], cols[u].omega->degree - d0});
    return out;
}

TensorElement truncate(const TensorElement& x, std::size_t hw_legs, int D) {
    TensorElement out;
    for (const auto& [k, c] : x)
        if (degree_of(k, hw_legs) <= D) out.emplace(k, c);
    return out;
}

// Delta(w) x keeping degrees <= D. Letters acting on an evaluation leg do not
// raise the degree, so nothing can be discarded before the word is applied;
// degrees never decrease, so terms past D can be dropped along the way.
TensorElement apply_word_upto(const TensorSpace& sp, const Word& w, const TensorElement& x, std::size_t hw_legs,
                              int D) {
    TensorElement y = truncate(x, hw_legs, D);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        y = sp.reduce(truncate(sp.f(*it - '0', y), hw_legs, D));
    return y;
}

} // namespace

std::map<int, std::vector<OmegaTerm>> x_operator_all(const OmegaVector& source, int D) {
    const WeightIndex eta = source.eta;
    const int n = eta.k;
    const int k = source.xi.k + n;
    const IntertwinerExpansion phi = type1_expand(eta, eta.sigma(), n, D);
    const TensorElement phi_img = phi.rational_image();
    const TensorSpace right(phi.factors);
    TensorElement lhs;
    for (const auto& [sk, sc] : source.vec) {
        const Word& w1 = sk.legs[0];
        const int room = D - static_cast<int>(w1.size());
        if (room < 0) continue;
        for (const auto& [k2, c2] : apply_word_upto(right, sk.legs[1], phi_img, 1, room))
            add_to(lhs, TensorKey{{w1, k2.legs[0], k2.legs[1]}, k2.zexp}, sc * c2);
    }
    return match_on_omega(lhs, source.xi, eta.sigma(), {k, source.a}, n, source.degree, D);
}

std::vector<OmegaTerm> x_operator(const OmegaVector& source, int lamp, int max_degree) {
    const int k = source.xi.k + source.eta.k;
    if (!admissible(k, source.a, lamp, source.eta.k))
        throw InadmissiblePair("X from " + std::to_string(source.a) + " to " + std::to_string(lamp));
    auto all = x_operator_all(source, max_degree);
    return all[lamp];
}

std::map<int, std::vector<OmegaTerm>> z_operator_all(const OmegaVector& source, WeightIndex xip, int m, int D) {
    const WeightIndex xi = source.xi, eta = source.eta;
    const int n = eta.k;
    const int k = xi.k + n;
    if (m <= n || m > k) throw UnsupportedFusion("Z needs n < m <= k");
    // Phi_xi^{xi' V^{(m-n)}} on the first leg
    const IntertwinerExpansion p1 = type1_expand(xi, xip, m - n, D);
    const TensorElement p1_img = p1.rational_image();
    const TensorSpace left(p1.factors);
    // Phi_eta^{(m-n,m)} on u_i (x) F v_eta
    const std::vector<IntertwinerExpansion> p2 = type2_solve(eta, m - n, D);
    const TensorSpace right(p2[0].factors);
    std::vector<TensorElement> p2_img;
    const RatFunc s2 = p2[m - n].radicand_base / c_squared(m - n, m - n);
    if (!s2.is_one()) throw UnsupportedFusion("normalization of the type 2 operator is not rational");
    for (const auto& x : p2) p2_img.push_back(x.image);
    const HWModule& me = *hw_module(eta, D + 1);

    std::map<std::pair<int, Word>, TensorElement> memo;
    std::function<const TensorElement&(int, const Word&)> psi = [&](int i, const Word& w) -> const TensorElement& {
        auto key = std::make_pair(i, w);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        TensorElement r;
        if (w.empty()) {
            r = p2_img[i];
        } else {
            // u_i (x) f_l y = Delta(f_l)(u_i (x) y) - f_l u_i (x) t_l^{-1} y
            const int l = w[0] - '0';
            const Word rest = w.substr(1);
            r = truncate(right.reduce(right.f(l, psi(i, rest))), 1, D);
            const RatFunc tinv = RatFunc::q_power(-me.h_of(l, rest));
            for (const auto& t : eval_action_w({GenKind::f, l}, m - n, i))
                r = r - scaled(shift_zeta(psi(t.j, rest), t.zexp), t.coeff * tinv);
        }
        return memo.emplace(key, std::move(r)).first->second;
    };

    TensorElement lhs;
    for (const auto& [sk, sc] : source.vec) {
        const TensorElement first = apply_word_upto(left, sk.legs[0], p1_img, 1, D);
        for (const auto& [k1, c1] : first) {
            const int room = D - static_cast<int>(k1.legs[0].size());
            const int i = eval_index(k1.legs[1]);
            for (const auto& [k2, c2] : psi(i, sk.legs[1])) {
                if (static_cast<int>(k2.legs[0].size()) > room) continue;
                add_to(lhs, TensorKey{{k1.legs[0], k2.legs[0], k2.legs[1]}, k1.zexp + k2.zexp}, sc * c1 * c2);
            }
        }
    }
    return match_on_omega(lhs, xip, eta.sigma(), {k, source.a}, m, source.degree, D);
}

std::vector<OmegaTerm> z_operator(const OmegaVector& source, WeightIndex xip, int m, int lamp, int max_degree) {
    const int k = source.xi.k + source.eta.k;
    if (!admissible(k, source.a, lamp, m))
        throw InadmissiblePair("Z from " + std::to_string(source.a) + " to " + std::to_string(lamp));
    auto all = z_operator_all(source, xip, m, max_degree);
    return all[lamp];
}

CommutationReport x_commutation_check(const OmegaVector& source, int lamp, int lampp, int order, int max_degree,
                                      int intermediate_degree) {
    const int n = source.eta.k;
    if (n != 1) throw UnsupportedFusion("X commutation needs C^{(n,n)} for n = " + std::to_string(n));
    const int k = source.xi.k + n;
    const int lam = source.a;
    const int bound = 2 * order + 1;
    const int work = bound + 8;
    CommutationReport rep;
    if (!admissible(k, lam, lamp, 1) || !admissible(k, lamp, lampp, 1)) return rep;

    // Terms carry zeta = zeta1/zeta2 only; the common zeta2 power is the
    // degree difference and drops out.
    std::map<int, QSeries> lhs, rhs; // keyed by target degree
    auto targets = [&](const OmegaTerm& mid, int to) {
        return x_operator(mid.target, to, std::max(max_degree, mid.target.degree));
    };
    for (int lt = 0; lt <= k; ++lt) {
        if (!admissible(k, lam, lt, 1) || !admissible(k, lt, lampp, 1)) continue;
        const QSeries c = conn_n1(k, 1, lam, lt, lamp, lampp, Spectral{1, 0, 1}, work);
        for (const auto& mid : x_operator(source, lt, intermediate_degree)) {
            if (mid.coeff.is_zero()) continue;
            for (const auto& t : targets(mid, lampp)) {
                if (t.target.degree > max_degree || t.coeff.is_zero()) continue;
                QSeries v = c * (mid.coeff * t.coeff).to_series(work).shifted(0, t.zexp);
                auto [it, ins] = lhs.emplace(t.target.degree, v);
                if (!ins) it->second += v;
            }
        }
    }
    for (const auto& mid : x_operator(source, lamp, intermediate_degree)) {
        if (mid.coeff.is_zero()) continue;
        for (const auto& t : targets(mid, lampp)) {
            if (t.target.degree > max_degree || t.coeff.is_zero()) continue;
            QSeries v = (mid.coeff * t.coeff).to_series(work).shifted(0, mid.zexp);
            auto [it, ins] = rhs.emplace(t.target.degree, v);
            if (!ins) it->second += v;
        }
    }
    std::map<int, bool> degrees;
    for (const auto& [d, v] : lhs) degrees[d] = true;
    for (const auto& [d, v] : rhs) degrees[d] = true;
    for (const auto& [d, unused] : degrees) {
        const QSeries a = lhs.count(d) ? lhs[d] : QSeries::zero();
        const QSeries b = rhs.count(d) ? rhs[d] : QSeries::zero();
        ++rep.compared;
        if (a.order() < bound || b.order() < bound || !a.agrees_with(b, bound)) {
            if (rep.ok)
                rep.first_failure = "target degree " + std::to_string(d) + ": " + a.truncated(bound).to_string() +
                                    " vs " + b.truncated(bound).to_string();
            rep.ok = false;
        }
    }
    return rep;
}

bool surd_equal(const SurdCoeff& a, const SurdCoeff& b) {
    if (a.rational.is_zero() || b.rational.is_zero()) return a.rational.is_zero() && b.rational.is_zero();
    if (!(a.rational * a.rational * a.radicand == b.rational * b.rational * b.radicand)) return false;
    auto sign = [](const RatFunc& r) {
        const Poly& p = r.num();
        return sgn(p.coeff(p.low_order())) * sgn(r.den().coeff(0));
    };
    return sign(a.rational) == sign(b.rational);
}

} // namespace rsos
