#include <gtest/gtest.h>

#include "dy/errors.hpp"
#include "dy/scalar.hpp"

using namespace dy;

namespace {

Polynomial P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return Polynomial(v);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("6/4"), frac(3, 2));
    EXPECT_EQ(to_string(frac(-3, 6)), "-1/2");
    EXPECT_EQ(to_string(Rational(0)), "0");
    EXPECT_THROW(parse_rational("1/0"), ZeroDenominator);
    EXPECT_THROW(parse_rational("x"), ParseError);
}

TEST(RatfnNormalize, CancelsCommonFactor) {
    auto r = ratfn_normalize(P({-1, 0, 1}), P({-1, 1}));
    EXPECT_EQ(r.num(), P({1, 1}));
    EXPECT_EQ(r.den(), P({1}));
}

TEST(RatfnNormalize, MonicDenominator) {
    auto r = ratfn_normalize(P({0, 2}), P({2}));
    EXPECT_EQ(r.num(), P({0, 1}));
    EXPECT_EQ(r.den(), P({1}));
}

TEST(RatfnNormalize, IdentityCase) {
    Rational a(3, 2);
    auto r = ratfn_normalize(Polynomial::linear_root(a), Polynomial::linear_root(a));
    EXPECT_EQ(r, RationalFunction(1));
}

TEST(RatfnNormalize, ZeroDenominator) {
    EXPECT_THROW(ratfn_normalize(P({1}), Polynomial()), ZeroDenominator);
}

TEST(RatfnNormalize, CanonicalFormIsStructural) {
    // (u+1)/(u-1) built two ways
    RationalFunction a(P({1, 1}), P({-1, 1}));
    RationalFunction b = RationalFunction(1) + RationalFunction(P({2}), P({-1, 1}));
    RationalFunction c(P({-3, -2, 1}) * Rational(5), P({3, -4, 1}) * Rational(5));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
}

TEST(SeriesExpand, GeometricAtInfinity) {
    RationalFunction r(P({1}), P({-1, 1}));
    auto s = series_expand(r, ExpansionPoint::AtInfinity, 3);
    ASSERT_EQ(s.coefficients.size(), 3u);
    for (auto& c : s.coefficients) EXPECT_EQ(c, 1);
}

TEST(SeriesExpand, GeometricAtZero) {
    RationalFunction r(P({1}), P({-1, 1}));
    auto s = series_expand(r, ExpansionPoint::AtZero, 3);
    ASSERT_EQ(s.coefficients.size(), 3u);
    for (auto& c : s.coefficients) EXPECT_EQ(c, -1);
}

TEST(SeriesExpand, ZeroFunction) {
    for (auto pt : {ExpansionPoint::AtInfinity, ExpansionPoint::AtZero}) {
        auto s = series_expand(RationalFunction(), pt, 5);
        ASSERT_EQ(s.coefficients.size(), 5u);
        for (auto& c : s.coefficients) EXPECT_EQ(c, 0);
    }
}

TEST(SeriesExpand, PoleAtZero) {
    RationalFunction r(P({1}), P({0, 1}));
    EXPECT_THROW(series_expand(r, ExpansionPoint::AtZero, 2), PoleAtExpansionPoint);
}

TEST(SeriesExpand, ImproperSplitsPolynomialPart) {
    // (u^2+1)/(u-2) = u + 2 + 5/(u-2)
    RationalFunction r(P({1, 0, 1}), P({-2, 1}));
    EXPECT_EQ(polynomial_part(r), P({2, 1}));
    auto s = series_expand(r, ExpansionPoint::AtInfinity, 4);
    EXPECT_EQ(s.coefficients[0], 5);
    EXPECT_EQ(s.coefficients[1], 10);
    EXPECT_EQ(s.coefficients[3], 40);
}

// Independent oracle: multiply the truncated series back by the denominator.
TEST(SeriesExpand, ResummationResidualStartsAboveOrder) {
    RationalFunction r(P({3, -1, 2}), P({5, 1, 7, 1}) );
    const int N = 8;
    auto z = series_expand(r, ExpansionPoint::AtZero, N);
    Polynomial s(z.coefficients);
    Polynomial diff = s * r.den() - r.num();
    for (int i = 0; i < N; ++i) EXPECT_EQ(diff.coeff(i), 0) << i;
    auto inf = series_expand(r, ExpansionPoint::AtInfinity, N);
    // u^N * (sum c_k u^-k) * den - u^N * num has no terms above degree deg(den)-1
    std::vector<Rational> up(N + 1);
    for (int k = 1; k <= N; ++k) up[N - k] = inf.coefficients[k - 1];
    Polynomial lhs = Polynomial(up) * r.den();
    std::vector<Rational> shifted(N);
    shifted.push_back(1);
    Polynomial uN(shifted);
    Polynomial d = lhs - r.num() * uN;
    EXPECT_LT(d.degree(), r.den().degree());
}

TEST(RatfnEval, Basics) {
    RationalFunction r(P({1, 1}), P({-1, 1}));
    EXPECT_EQ(ratfn_eval(r, 3), 2);
    EXPECT_EQ(ratfn_eval(r, -1), 0);
    EXPECT_THROW(ratfn_eval(r, 1), EvaluationAtPole);
}

TEST(RationalFunction, FieldInverse) {
    RationalFunction a(P({2, 0, 1}), P({-5, 3}));
    EXPECT_EQ(a * a.inverse(), RationalFunction(1));
    EXPECT_THROW(RationalFunction().inverse(), ZeroDenominator);
}

TEST(RationalFunction, Shift) {
    RationalFunction a(P({1}), P({-1, 1}));
    EXPECT_EQ(a.shift(frac(1, 2)), RationalFunction(P({1}), Polynomial::linear_root(frac(1, 2))));
}

TEST(Binomial, NegativeUpper) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(-1, 3), -1);
    EXPECT_EQ(binomial(-2, 2), 3);
}
