#include <gtest/gtest.h>

#include "dy/errors.hpp"
#include "dy/gauss.hpp"

using namespace dy;

namespace {

RationalFunction lin_ratio(const Rational& num_root, const Rational& den_root) {
    return RationalFunction(Polynomial::linear_root(num_root), Polynomial::linear_root(den_root));
}

RationalFunction pole(const Rational& p) { return RationalFunction(Polynomial(Rational(1)), Polynomial::linear_root(p)); }

OpFn diag3(const RationalFunction& a, const RationalFunction& b, const RationalFunction& c) {
    return OpFn(a, QMatrix::unit(3, 0, 0)) + OpFn(b, QMatrix::unit(3, 1, 1)) + OpFn(c, QMatrix::unit(3, 2, 2));
}

}  // namespace

TEST(GaussDecompose, IdentityInput) {
    GaussFactors G = gauss_decompose(trivial_rep());
    for (const OpFn* k : {&G.k1, &G.k2, &G.k3}) EXPECT_EQ(*k, OpFn::identity(3));
    for (const OpFn* x : {&G.etilde1, &G.etilde2, &G.etilde3, &G.ftilde1, &G.ftilde2, &G.ftilde3})
        EXPECT_TRUE(x->is_zero());
    CurrentSystem c = currents(G);
    for (int i = 0; i < 3; ++i) {
        EXPECT_TRUE(c.e[i].is_zero());
        EXPECT_TRUE(c.f[i].is_zero());
        EXPECT_EQ(c.h[i], OpFn::identity(3));
    }
}

TEST(GaussDecompose, K1IsT11) {
    TOperator T = tensor_rep(build_eval_rep(1), build_eval_rep(3));
    EXPECT_EQ(gauss_decompose(T).k1, T(0, 0));
}

TEST(GaussDecompose, RecompositionExact) {
    for (const TOperator& T : {build_eval_rep(frac(2, 3)), tensor_rep(build_eval_rep(0), build_eval_rep(1)),
                               tensor_rep(build_eval_rep(1), build_eval_rep(3))}) {
        TOperator R = recompose(gauss_decompose(T));
        for (int k = 0; k < 9; ++k) EXPECT_EQ(R.t[k], T.t[k]);
    }
}

TEST(GaussDecompose, SingularLeadingMinor) {
    TOperator T = trivial_rep();
    T(0, 0) = OpFn(3);
    EXPECT_THROW(gauss_decompose(T), SingularLeadingMinor);
}

// Closed forms from a direct symbolic 3x3 computation.
TEST(Currents, EvaluationRepClosedForm) {
    Rational a = 2;
    CurrentSystem c = currents(build_eval_rep(a));
    Rational h = frac(1, 2);
    EXPECT_EQ(c.e[0], OpFn(pole(a), QMatrix::unit(3, 1, 0)));
    EXPECT_EQ(c.e[1], OpFn(pole(a - h), QMatrix::unit(3, 2, 1)));
    EXPECT_EQ(c.e[2], OpFn(pole(a), QMatrix::unit(3, 2, 0)));
    EXPECT_EQ(c.f[0], OpFn(pole(a), QMatrix::unit(3, 0, 1)));
    EXPECT_EQ(c.f[1], OpFn(pole(a - h), QMatrix::unit(3, 1, 2)));
    EXPECT_EQ(c.f[2], OpFn(pole(a), QMatrix::unit(3, 0, 2)));
    EXPECT_EQ(c.h[0], diag3(lin_ratio(a + 1, a), lin_ratio(a - 1, a), RationalFunction(1)));
    EXPECT_EQ(c.h[1], diag3(RationalFunction(1), lin_ratio(a + h, a - h), lin_ratio(a - 3 * h, a - h)));
    EXPECT_EQ(c.e[0].den(), Polynomial::linear_root(a));
}

TEST(Currents, E3FromResidueOfE2) {
    for (const TOperator& T : {build_eval_rep(1), tensor_rep(build_eval_rep(1), build_eval_rep(3))}) {
        CurrentSystem c = currents(T);
        OpFn e20(current_mode(c.e[1], 0)), e10(current_mode(c.e[0], 0));
        OpFn f20(current_mode(c.f[1], 0)), f10(current_mode(c.f[0], 0));
        EXPECT_EQ(c.e[2], -commutator(c.e[0], e20));
        EXPECT_EQ(c.f[2], commutator(c.f[0], f20));
        EXPECT_EQ(c.e3p, commutator(e10, c.e[1]));
        EXPECT_EQ(c.f3p, -commutator(f10, c.f[1]));
    }
}

TEST(Currents, ModesOfEvaluationRep) {
    // e1(u) = E21/(u-a): e_{1,k} = a^k E21, e_{1,-m-1} = a^{-m-1} E21
    Rational a = 3;
    CurrentSystem c = currents(build_eval_rep(a));
    QMatrix E21 = QMatrix::unit(3, 1, 0);
    EXPECT_EQ(current_mode(c.e[0], 0), E21);
    EXPECT_EQ(current_mode(c.e[0], 2), E21 * Rational(9));
    EXPECT_EQ(current_mode(c.e[0], -1), E21 * frac(1, 3));
    EXPECT_EQ(current_mode(c.e[0], -3), E21 * frac(1, 27));
    // h1 = 1 + diag(-1,1,0)/(u-a)
    QMatrix H(3, 3);
    H(0, 0) = -1;
    H(1, 1) = 1;
    EXPECT_EQ(current_mode(c.h[0], 0, true), H);
    EXPECT_EQ(current_mode(c.h[0], -1, true), H * frac(1, 3));
}

TEST(VerifyGaussCwMatch, Passes) {
    EXPECT_TRUE(verify_gauss_cw_match(build_eval_rep(frac(1, 2))).pass);
    EXPECT_TRUE(verify_gauss_cw_match(tensor_rep(build_eval_rep(0), build_eval_rep(1))).pass);
    EXPECT_TRUE(verify_gauss_cw_match(trivial_rep()).pass);
}

TEST(ScalarTwist, CurrentsUnchanged) {
    auto ratio = [](long n, long d) {
        return RationalFunction(Polynomial::linear_root(n), Polynomial::linear_root(d));
    };
    EXPECT_TRUE(scalar_twist_invariance(build_eval_rep(1), RationalFunction(1)).pass);
    EXPECT_TRUE(scalar_twist_invariance(build_eval_rep(1), ratio(-2, -1)).pass);
    EXPECT_TRUE(scalar_twist_invariance(tensor_rep(build_eval_rep(1), build_eval_rep(3)), ratio(5, 4)).pass);
}

TEST(SerreInRep, Vanishes) {
    EXPECT_TRUE(serre_in_rep(build_eval_rep(1)).pass);
    EXPECT_TRUE(serre_in_rep(tensor_rep(build_eval_rep(1), build_eval_rep(3))).pass);
}

TEST(Currents, CoassociativeAtCurrentLevel) {
    TOperator a = build_eval_rep(1), b = build_eval_rep(3), c = build_eval_rep(7);
    CurrentSystem l = currents(tensor_rep(tensor_rep(a, b), c)), r = currents(tensor_rep(a, tensor_rep(b, c)));
    EXPECT_EQ(l.e[0], r.e[0]);
    EXPECT_EQ(l.h[1], r.h[1]);
}
