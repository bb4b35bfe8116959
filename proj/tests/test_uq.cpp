#include <gtest/gtest.h>

#include "rsos/errors.hpp"
#include "rsos/uq.hpp"

using namespace rsos;

namespace {

RatFunc Q(int n) { return q_integer(n); }
RatFunc qp(int e) { return RatFunc::q_power(e); }

const WeightIndex L0{1, 0}, L1{1, 1}, T0{2, 0}, L10{2, 1};

// sum of c * (w1 v (x) w2 v)
struct Term {
    RatFunc c;
    Word w1, w2;
};
TensorElement pair_vec(const std::vector<Term>& ts) {
    TensorElement x;
    for (const auto& t : ts) add_to(x, TensorKey{{t.w1, t.w2}, 0}, t.c);
    return x;
}

const OmegaVector& at_degree(const std::vector<OmegaVector>& b, int d) {
    const OmegaVector* hit = nullptr;
    for (const auto& v : b)
        if (v.degree == d) {
            EXPECT_EQ(hit, nullptr) << "several vectors at degree " << d;
            hit = &v;
        }
    if (!hit) throw std::runtime_error("no vector at degree " + std::to_string(d));
    return *hit;
}

void expect_same(const TensorSpace& s, const TensorElement& a, const TensorElement& b) {
    TensorElement d = s.reduce(a - b);
    EXPECT_TRUE(d.empty()) << "difference " << to_string(d) << "\n got " << to_string(s.reduce(a));
}

} // namespace

TEST(Uq, FreeActionExamples) {
    HWModule m(L0);
    ModuleElement f0v{{"0", RatFunc(1)}};
    ModuleElement v{{"", RatFunc(1)}};
    EXPECT_EQ(m.e(0, f0v), v);
    EXPECT_TRUE(m.e(1, f0v).empty());
    EXPECT_EQ(m.t(1, f0v), (ModuleElement{{"0", qp(2)}}));
    EXPECT_EQ(m.t(0, f0v), (ModuleElement{{"0", qp(-1)}}));
}

TEST(Uq, GramSmallDegrees) {
    HWModule m(L0);
    RMatrix g0 = m.gram({""});
    EXPECT_EQ(g0[0][0], RatFunc(1));
    RMatrix g1 = m.gram({"0", "1"});
    EXPECT_FALSE(g1[0][0].is_zero());
    EXPECT_TRUE(g1[1][1].is_zero());
    EXPECT_TRUE(g1[0][1].is_zero());
    EXPECT_EQ(m.basis(1), std::vector<Word>{"0"});
}

TEST(Uq, GramThreeLambda0DegreeTwo) {
    HWModule m(WeightIndex{3, 0});
    // <f0 f0 v, f0 f0 v> = ([1] + [3]) [3], <f1 f0 v, f1 f0 v> = [2][3]
    EXPECT_EQ(m.form("00", "00"), (Q(1) + Q(3)) * Q(3));
    EXPECT_EQ(m.form("10", "10"), Q(2) * Q(3));
    EXPECT_TRUE(m.form("01", "10").is_zero());
    EXPECT_TRUE(m.form("11", "11").is_zero());
    EXPECT_EQ(rank(m.gram(HWModule::words({1, 1})), 2), 1);
    EXPECT_EQ(m.basis(2).size(), 2u);
}

TEST(Uq, GramSymmetric) {
    for (WeightIndex lam : {L0, T0, L10, WeightIndex{3, 1}}) {
        HWModule m(lam, 4);
        for (Content c : {Content{2, 1}, Content{2, 2}, Content{1, 3}}) {
            auto ws = HWModule::words(c);
            for (const auto& a : ws)
                for (const auto& b : ws) EXPECT_EQ(m.form(a, b), m.form(b, a)) << a << " " << b;
        }
    }
}

TEST(Uq, QuotientKillsTopPowers) {
    for (int k = 1; k <= 3; ++k)
        for (int a = 0; a <= k; ++a) {
            HWModule m(WeightIndex{k, a}, 5);
            for (int i : {0, 1}) {
                const int h = i == 0 ? k - a : a;
                Word w(static_cast<std::size_t>(h + 1), static_cast<char>('0' + i));
                EXPECT_TRUE(m.is_zero(ModuleElement{{w, RatFunc(1)}})) << "k=" << k << " a=" << a << " i=" << i;
                Word w2(static_cast<std::size_t>(h), static_cast<char>('0' + i));
                EXPECT_FALSE(m.is_zero(ModuleElement{{w2, RatFunc(1)}}));
            }
        }
}

TEST(Uq, CommutatorOnQuotient) {
    for (WeightIndex lam : {L0, L1, T0, L10, WeightIndex{3, 0}, WeightIndex{3, 2}}) {
        HWModule m(lam, 5);
        for (int d = 0; d <= 3; ++d)
            for (const auto& w : m.basis(d))
                for (int i : {0, 1}) {
                    ModuleElement x{{w, RatFunc(1)}};
                    ModuleElement lhs = m.e(i, m.f(i, x));
                    for (const auto& [ww, c] : m.f(i, m.e(i, x))) add_to(lhs, ww, -c);
                    ModuleElement rhs{{w, Q(m.h_of(i, w))}};
                    if (rhs.begin()->second.is_zero()) rhs.clear();
                    EXPECT_EQ(m.reduce(lhs), rhs) << w;
                }
    }
}

TEST(Uq, QuotientGramNondegenerate) {
    HWModule m(WeightIndex{3, 1}, 5);
    for (int n0 = 0; n0 <= 3; ++n0)
        for (int n1 = 0; n0 + n1 <= 5 && n1 <= 3; ++n1) {
            const auto& b = m.basis(Content{n0, n1});
            EXPECT_EQ(rank(m.gram(b), static_cast<int>(b.size())), static_cast<int>(b.size()));
        }
}

TEST(Uq, DegreeOverflow) {
    HWModule m(L0, 2);
    EXPECT_THROW(m.basis(Content{2, 1}), DegreeOverflow);
}

TEST(Uq, EvaluationModules) {
    EXPECT_EQ(c_squared(2, 1), Q(2) * qp(1));
    EXPECT_EQ(c_squared(2, 0), RatFunc(1));
    EXPECT_EQ(c_squared(3, 1), Q(3) * qp(2));
    // principal u_j relates to homogeneous v_j by u_j = c_j zeta^j v_j: the
    // principal coefficient squared times c_{j'}^2 / c_j^2 is the rational part squared
    for (int N = 1; N <= 3; ++N)
        for (int j = 0; j <= N; ++j)
            for (GenKind kd : {GenKind::e, GenKind::f})
                for (int i : {0, 1}) {
                    auto hom = eval_action({kd, i}, N, j, EvalFlavor::homogeneous);
                    auto pri = eval_action({kd, i}, N, j, EvalFlavor::principal);
                    ASSERT_EQ(hom.size(), pri.size());
                    for (std::size_t t = 0; t < hom.size(); ++t) {
                        EXPECT_EQ(hom[t].j, pri[t].j);
                        EXPECT_EQ(pri[t].coeff.radicand * c_squared(N, pri[t].j), c_squared(N, j));
                        // principal gradation: e raises zeta by one, f lowers it
                        EXPECT_EQ(pri[t].zexp, kd == GenKind::e ? 1 : -1);
                        // homogeneous: only e_0 / f_0 carry z = zeta^2
                        EXPECT_EQ(hom[t].zexp, i == 0 ? (kd == GenKind::e ? 2 : -2) : 0);
                    }
                }
}

TEST(Uq, EvaluationIsRepresentation) {
    // [e_i, f_j] = delta_ij [h_i] on every basis vector, in the w basis
    for (int N = 1; N <= 3; ++N) {
        TensorSpace s({eval_factor(N)});
        for (int j = 0; j <= N; ++j) {
            TensorElement x{{TensorKey{{eval_leg(j)}, 0}, RatFunc(1)}};
            for (int i : {0, 1})
                for (int l : {0, 1}) {
                    TensorElement c = s.e(i, s.f(l, x)) - s.f(l, s.e(i, x));
                    TensorElement expect;
                    if (i == l) add_to(expect, TensorKey{{eval_leg(j)}, 0}, Q(s.h_of(i, x.begin()->first)));
                    EXPECT_EQ(c, expect) << "N=" << N << " j=" << j << " i=" << i << " l=" << l;
                }
        }
    }
}

TEST(Uq, TensorGroupLike) {
    TensorSpace s({hw_factor(T0), hw_factor(L0)});
    TensorElement x = pair_vec({{RatFunc(1), "0", "1"}});
    EXPECT_EQ(s.act({GenKind::t, 1}, x), scaled(x, qp(s.h_of(1, x.begin()->first))));
    EXPECT_EQ(s.h_of(1, x.begin()->first), 0 + 2 + 0 - 2);
}

TEST(Uq, CoproductPattern) {
    // Delta(f_0)(v (x) v) = q^{-1} f0 v (x) v + v (x) f0 v for 2Lambda_0 (x) Lambda_0
    TensorSpace s({hw_factor(T0), hw_factor(L0)});
    TensorElement v = pair_vec({{RatFunc(1), "", ""}});
    EXPECT_EQ(s.f(0, v), pair_vec({{qp(-1), "0", ""}, {RatFunc(1), "", "0"}}));
    TensorElement x12 = pair_vec({{RatFunc(1), "", "0"}, {-qp(2) / Q(2), "0", ""}});
    EXPECT_TRUE(s.is_zero(s.e(0, x12)));
    EXPECT_TRUE(s.is_zero(s.e(1, x12)));
}

TEST(Uq, StepTwoVectorsX) {
    TensorSpace s0({hw_factor(T0), hw_factor(L0)});
    const RatFunc d = Q(4) - Q(2);
    auto b0 = omega_basis(T0, L0, 0, 3);
    expect_same(s0, at_degree(b0, 0).vec, pair_vec({{RatFunc(1), "", ""}}));
    auto b2 = omega_basis(T0, L0, 2, 3);
    expect_same(s0, at_degree(b2, 1).vec, pair_vec({{RatFunc(1), "", "0"}, {-qp(2) / Q(2), "0", ""}}));
    expect_same(s0, at_degree(b2, 3).vec,
                pair_vec({{RatFunc(1) / Q(2), "", "010"},
                          {-qp(2) / Q(2).pow(2), "0", "10"},
                          {qp(4) / Q(2).pow(2), "10", "0"},
                          {qp(6) / (Q(2).pow(2) * d), "100", ""},
                          {qp(6) / (Q(2).pow(2) * d) * (RatFunc(1) - Q(3)), "010", ""}}));

    TensorSpace s1({hw_factor(T0), hw_factor(L1)});
    auto b1 = omega_basis(T0, L1, 1, 3);
    expect_same(s1, at_degree(b1, 0).vec, pair_vec({{RatFunc(1), "", ""}}));
    expect_same(s1, at_degree(b1, 2).vec,
                pair_vec({{RatFunc(1) / Q(2), "", "01"}, {-qp(2) / Q(2), "0", "1"}, {qp(4) / Q(2).pow(2), "10", ""}}));
    auto b3 = omega_basis(T0, L1, 3, 3);
    expect_same(s1, at_degree(b3, 3).vec,
                pair_vec({{RatFunc(1) / Q(2), "", "001"},
                          {-qp(2) / Q(2), "0", "01"},
                          {qp(2) / Q(2), "00", "1"},
                          {qp(6) / (Q(2) * d), "010", ""},
                          {-qp(6) / (Q(2) * d), "100", ""}}));
}

TEST(Uq, StepTwoVectorsY) {
    TensorSpace s({hw_factor(L10), hw_factor(L0)});
    const RatFunc d = RatFunc(1) - Q(3).pow(2);
    TensorElement y11 = pair_vec({{RatFunc(1), "", ""}});
    TensorElement y13 = pair_vec({{RatFunc(1), "", "0"}, {-qp(1), "0", ""}});
    TensorElement y21 = pair_vec({{RatFunc(1) / Q(2), "", "10"},
                                  {-qp(1), "1", "0"},
                                  {qp(4) / d, "10", ""},
                                  {-qp(4) / d * Q(3), "01", ""}});
    TensorElement y23 = pair_vec({{RatFunc(1) / Q(2), "", "010"},
                                  {-qp(1) / Q(2), "0", "10"},
                                  {qp(4) / d, "01", "0"},
                                  {-qp(4) / d * Q(3), "10", "0"},
                                  {-qp(5) / d, "001", ""},
                                  {qp(5) / d * Q(3), "010", ""}});
    auto b1 = omega_basis(L10, L0, 1, 3);
    auto b3 = omega_basis(L10, L0, 3, 3);
    expect_same(s, at_degree(b1, 0).vec, y11);
    expect_same(s, at_degree(b1, 2).vec, y21);
    expect_same(s, at_degree(b3, 1).vec, y13);
    expect_same(s, at_degree(b3, 3).vec, y23);

    // V(Lambda_1 + Lambda_0) (x) V(Lambda_1) by the bar operation
    TensorSpace sb({hw_factor(L10), hw_factor(L1)});
    auto c2 = omega_basis(L10, L1, 2, 3);
    auto c0 = omega_basis(L10, L1, 0, 3);
    expect_same(sb, at_degree(c2, 0).vec, bar(y11, s.factors()));
    expect_same(sb, at_degree(c2, 2).vec, bar(y21, s.factors()));
    expect_same(sb, at_degree(c0, 1).vec, bar(y13, s.factors()));
    expect_same(sb, at_degree(c0, 3).vec, bar(y23, s.factors()));
    // the bar of y_1^{(3)} written out
    expect_same(sb, at_degree(c0, 1).vec, pair_vec({{RatFunc(1), "", "1"}, {-qp(1), "1", ""}}));
}

TEST(Uq, OmegaAnnihilatedExactly) {
    for (auto [xi, eta] : {std::pair{T0, L0}, std::pair{T0, L1}, std::pair{L10, L0}})
        for (int a = 0; a <= 3; ++a) {
            std::vector<OmegaVector> b;
            try {
                b = omega_basis(xi, eta, a, 4);
            } catch (const EmptySpace&) {
                continue;
            }
            TensorSpace s({hw_factor(xi, 5), hw_factor(eta, 5)});
            for (const auto& v : b) {
                EXPECT_TRUE(s.is_zero(s.e(0, v.vec)));
                EXPECT_TRUE(s.is_zero(s.e(1, v.vec)));
                for (const auto& [k, c] : v.vec) EXPECT_EQ(s.h_of(1, k), a);
            }
        }
}

TEST(Uq, OmegaEmpty) { EXPECT_THROW(omega_basis(T0, L1, 3, 2), EmptySpace); }
