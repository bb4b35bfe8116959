#include <gtest/gtest.h>

#include <random>

#include "rsos/ratfunc.hpp"

using namespace rsos;

namespace {

RatFunc qp(int e, long c = 1) { return RatFunc::q_power(e, Rational(c)); }

RatFunc random_ratfunc(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 3), sh(-3, 3);
    auto poly = [&](bool unit_const) {
        std::vector<Rational> c;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
        if (unit_const) c[0] = 1;
        return Poly(c);
    };
    Poly n = poly(false);
    if (n.is_zero()) n = Poly(Rational(1));
    return RatFunc(n, poly(true), sh(rng));
}

} // namespace

TEST(RatFunc, QIntegerValues) {
    EXPECT_TRUE(q_integer(0).is_zero());
    EXPECT_TRUE(q_integer(1).is_one());
    EXPECT_EQ(q_integer(3), qp(-2) + qp(0) + qp(2));
    EXPECT_EQ(q_integer(2), qp(-1) + qp(1));
}

TEST(RatFunc, QIntegerDefinition) {
    for (int n = 0; n < 7; ++n) {
        RatFunc def = (qp(n) - qp(-n)) / (qp(1) - qp(-1));
        EXPECT_EQ(q_integer(n), def) << n;
    }
}

TEST(RatFunc, QBinomial) {
    EXPECT_TRUE(q_binomial(5, 0).is_one());
    EXPECT_EQ(q_binomial(2, 1), qp(-1) + qp(1));
    EXPECT_EQ(q_binomial(4, 2), q_integer(4) * q_integer(3) / q_integer(2));
    auto fact = [](int n) {
        RatFunc r(1);
        for (int i = 1; i <= n; ++i) r *= q_integer(i);
        return r;
    };
    for (int n = 0; n < 7; ++n)
        for (int j = 0; j <= n; ++j) EXPECT_EQ(q_binomial(n, j), fact(n) / (fact(j) * fact(n - j)));
}

TEST(RatFunc, QIntegerAddition) {
    for (int m = 0; m <= 8; ++m)
        for (int n = 0; n <= 8; ++n) EXPECT_EQ(q_integer(m + n), qp(n) * q_integer(m) + qp(-m) * q_integer(n));
}

TEST(RatFunc, ToSeries) {
    RatFunc geo = RatFunc(1) / (RatFunc(1) - qp(1));
    QSeries s = geo.to_series(20);
    for (int n = 0; n < 10; ++n) EXPECT_EQ(s.coeff(2 * n), ZetaPoly(Rational(1)));
    EXPECT_TRUE(s.coeff(1).is_zero());
    QSeries inv2 = (RatFunc(1) / q_integer(2)).to_series(20);
    EXPECT_TRUE(inv2.agrees_with(invert(q_integer(2).to_series(40))));
    EXPECT_EQ(inv2.coeff(2), ZetaPoly(Rational(1)));
    EXPECT_EQ(inv2.coeff(6), ZetaPoly(Rational(-1)));
    EXPECT_TRUE(RatFunc().to_series(10).is_zero());
}

TEST(RatFunc, Canonical) {
    RatFunc a = (qp(2) - RatFunc(1)) / (qp(1) - RatFunc(1));
    EXPECT_EQ(a, qp(1) + RatFunc(1));
    RatFunc b = RatFunc(2) / RatFunc(4);
    EXPECT_EQ(b, RatFunc(Rational(1, 2)));
    EXPECT_TRUE((a - a).is_zero());
}

TEST(RatFuncProperty, SeriesHomomorphism) {
    std::mt19937 rng(3);
    const int order = 15;
    for (int trial = 0; trial < 150; ++trial) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
        QSeries sa = a.to_series(40), sb = b.to_series(40);
        EXPECT_TRUE((a + b).to_series(order).agrees_with(sa + sb, order));
        EXPECT_TRUE((a * b).to_series(order).agrees_with(sa * sb, order));
        EXPECT_TRUE((a / b).to_series(order).agrees_with(sa / sb, order));
    }
}
