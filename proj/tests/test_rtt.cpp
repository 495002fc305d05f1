#include <gtest/gtest.h>

#include "dy/errors.hpp"
#include "dy/rtt.hpp"

using namespace dy;

namespace {

Grid default_grid(const std::vector<Rational>& params) { return make_grid(25, standard_poles(params)); }

// Independent 6-term expansion evaluated pointwise.
QMatrix qdet_pointwise(const TOperator& T, const Rational& u) {
    int p[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    int sg[6] = {1, -1, -1, 1, 1, -1};
    QMatrix s(T.dim(), T.dim());
    for (int k = 0; k < 6; ++k) {
        QMatrix m = T(0, p[k][0]).eval(u + 1) * T(1, p[k][1]).eval(u) * T(2, p[k][2]).eval(u - 1);
        s += m * Rational(sg[k]);
    }
    return s;
}

}  // namespace

TEST(BuildEvalRep, TrivialVariantIsIdentity) {
    TOperator T = trivial_rep();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(T(i, j), i == j ? OpFn::identity(3) : OpFn(3));
    EXPECT_TRUE(check_rtt(T, default_grid({0})).pass);
}

TEST(BuildEvalRep, OffDiagonalIsRankOneNilpotentOverU) {
    TOperator T = build_eval_rep(0);
    const OpFn& t12 = T(0, 1);
    EXPECT_EQ(t12.den(), Polynomial::X());
    QMatrix r = t12.eval(1);  // residue matrix
    EXPECT_FALSE(r.is_zero());
    EXPECT_TRUE((r * r).is_zero());
    int nnz = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) nnz += r(i, j) != 0;
    EXPECT_EQ(nnz, 1);
}

TEST(BuildEvalRep, SinglePoleAtParameter) {
    Rational a = frac(1, 2);
    TOperator T = build_eval_rep(a);
    for (const auto& f : T.t) EXPECT_EQ(f.den(), Polynomial::linear_root(a));
}

TEST(CheckRtt, EvaluationRepsPass) {
    for (Rational a : {Rational(0), frac(1, 2), Rational(1)}) {
        auto rep = check_rtt(build_eval_rep(a), default_grid({a}));
        EXPECT_TRUE(rep.pass) << a.get_str();
        EXPECT_EQ(rep.samples_used, 25);
    }
}

// Regression for the index convention: only E_ji passes.
TEST(CheckRtt, IndexConventionRegression) {
    auto grid = default_grid({1});
    EXPECT_TRUE(check_rtt(build_eval_rep(1, IndexConvention::Transposed), grid).pass);
    auto bad = check_rtt(build_eval_rep(1, IndexConvention::Direct), grid);
    EXPECT_FALSE(bad.pass);
    EXPECT_TRUE(bad.counterexample.has_value());
}

TEST(CheckRtt, SignFlipFails) {
    TOperator T = build_eval_rep(frac(1, 2));
    T(0, 1) = -T(0, 1);
    auto rep = check_rtt(T, default_grid({frac(1, 2)}));
    EXPECT_FALSE(rep.pass);
    ASSERT_TRUE(rep.counterexample.has_value());
    EXPECT_NE(rep.counterexample->lhs, rep.counterexample->rhs);
}

TEST(CheckRtt, PoleCollision) {
    Grid g = {{Rational(1), Rational(2)}};
    EXPECT_THROW(check_rtt(build_eval_rep(1), g), PoleCollision);
    Grid d = {{Rational(5), Rational(5)}};
    EXPECT_THROW(check_rtt(build_eval_rep(1), d), PoleCollision);
}

TEST(CheckRtt, SerialAndParallelAgree) {
    TOperator T = build_eval_rep(1);
    T(2, 0) = T(2, 0) * RationalFunction(2);
    auto g = default_grid({1});
    auto a = check_rtt(T, g, Exec::Serial), b = check_rtt(T, g, Exec::Parallel);
    EXPECT_EQ(a.pass, b.pass);
    ASSERT_TRUE(a.counterexample && b.counterexample);
    EXPECT_EQ(a.counterexample->point, b.counterexample->point);
}

TEST(TensorRep, TrivialFirstLegPromotesSecond) {
    TOperator T2 = build_eval_rep(2);
    TOperator T = tensor_rep(trivial_rep(), T2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(T(i, j), kron(OpFn::identity(3), T2(i, j)));
}

TEST(TensorRep, TwoFoldPassesWithPolesAtParameters) {
    TOperator T = tensor_rep(build_eval_rep(0), build_eval_rep(1));
    EXPECT_EQ(T.dim(), 9);
    Polynomial allowed = Polynomial::X() * Polynomial::linear_root(1);
    for (const auto& f : T.t) {
        Polynomial q, r;
        divmod(allowed, f.den(), q, r);
        EXPECT_TRUE(r.is_zero()) << f.den().to_string();
    }
    EXPECT_TRUE(check_rtt(T, default_grid({0, 1})).pass);
}

TEST(TensorRep, Coassociative) {
    TOperator a = build_eval_rep(1), b = build_eval_rep(3), c = build_eval_rep(7);
    TOperator l = tensor_rep(tensor_rep(a, b), c), r = tensor_rep(a, tensor_rep(b, c));
    for (int k = 0; k < 9; ++k) EXPECT_EQ(l.t[k], r.t[k]);
}

TEST(QuantumDet, Identity) { EXPECT_EQ(quantum_det(trivial_rep()), OpFn::identity(3)); }

TEST(QuantumDet, EvaluationRepScalar) {
    // Direct expansion of the signed sum gives (u+2)/(u+1) at a=0.
    OpFn q = quantum_det(build_eval_rep(0));
    RationalFunction expect(Polynomial(std::vector<Rational>{2, 1}), Polynomial(std::vector<Rational>{1, 1}));
    EXPECT_EQ(q, OpFn::scalar(3, expect));
    TOperator T = build_eval_rep(0);
    for (Rational u : {frac(1, 7), frac(3, 7), Rational(5)}) EXPECT_EQ(q.eval(u), qdet_pointwise(T, u));
}

TEST(QuantumDet, MultiplicativeUnderCoproduct) {
    TOperator a = build_eval_rep(0), b = build_eval_rep(1);
    EXPECT_EQ(quantum_det(tensor_rep(a, b)), kron(quantum_det(a), quantum_det(b)));
}

TEST(QuantumDet, Central) {
    TOperator T = tensor_rep(build_eval_rep(1), build_eval_rep(3));
    OpFn q = quantum_det(T);
    for (const auto& [u, v] : make_grid(9, standard_poles({0, 1, 2, 3, 4}))) {
        QMatrix qu = q.eval(u);
        for (const auto& f : T.t) EXPECT_TRUE(commutator(qu, f.eval(v)).is_zero());
    }
}

TEST(Antipode, Identity) {
    TOperator S = antipode_T(trivial_rep());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(S(i, j), i == j ? OpFn::identity(3) : OpFn(3));
}

TEST(Antipode, EvaluationRepInverse) {
    TOperator T = build_eval_rep(0);
    TOperator S = antipode_T(T);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            OpFn s(3);
            for (int k = 0; k < 3; ++k) s = s + T(i, k) * S(k, j);
            EXPECT_EQ(s, i == j ? OpFn::identity(3) : OpFn(3));
        }
    // T = 1 + P/u with P^2 = 1, so T^{-1} = (u^2 - uP)/(u^2 - 1)
    Polynomial den = Polynomial::linear_root(1) * Polynomial::linear_root(-1);
    Polynomial u2 = Polynomial::X() * Polynomial::X();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            OpFn expect = OpFn(RationalFunction(-Polynomial::X(), den), QMatrix::unit(3, j, i));
            if (i == j) expect = expect + OpFn::scalar(3, RationalFunction(u2, den));
            EXPECT_EQ(S(i, j), expect);
        }
}

TEST(Antipode, TensorIsFlippedComposition) {
    TOperator a = build_eval_rep(1), b = build_eval_rep(3);
    TOperator S = antipode_T(tensor_rep(a, b));
    TOperator Sa = antipode_T(a), Sb = antipode_T(b);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            OpFn s(9);
            for (int k = 0; k < 3; ++k) s = s + kron(Sa(i, k), Sb(k, j));
            EXPECT_EQ(S(i, j), s);
        }
}

TEST(Antipode, Singular) {
    TOperator T = trivial_rep();
    T(0, 0) = OpFn(3);
    EXPECT_THROW(antipode_T(T), SingularT);
}
