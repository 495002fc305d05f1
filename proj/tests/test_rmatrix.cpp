#include <gtest/gtest.h>

#include "dy/errors.hpp"
#include "dy/rmatrix.hpp"

using namespace dy;

namespace {

const std::vector<Rational> kGrid = {frac(1, 7), frac(2, 7), frac(-3, 5), Rational(5), frac(11, 3)};

}  // namespace

TEST(RMatrix, TrivialReps) {
    TOperator T = trivial_rep();
    RFactor E = assemble_RE(T, T), F = assemble_RF(T, T);
    EXPECT_TRUE(E.matrix.is_identity());
    EXPECT_TRUE(F.matrix.is_identity());
    CartanSolution H = solve_RH(E, F, T, T);
    EXPECT_TRUE(H.H.matrix.is_identity());
    EXPECT_EQ(H.scalar, 1);
    EXPECT_TRUE(check_intertwiner(QMatrix::identity(9), T, T, kGrid).pass);
}

TEST(RMatrix, ModeSumClosedForm) {
    TOperator A = build_eval_rep(1), B = build_eval_rep(3);
    CurrentSystem ca = currents(A), cb = currents(B);
    // e1 = E21/(u-1), f1 = E12/(v-3): sum N⊗M/(3-1)
    QMatrix want = kron(QMatrix::unit(3, 1, 0), QMatrix::unit(3, 0, 1)) * frac(1, 2);
    EXPECT_EQ(mode_sum(ca.e[0], cb.f[0]), want);
    for (int i = 0; i < 3; ++i) {
        QMatrix s = mode_sum(ca.e[i], cb.f[i]);
        EXPECT_FALSE(s.is_zero());
        EXPECT_TRUE((s * s).is_zero());
        // partial sums plus the geometric tail give the closed form exactly
        for (int K : {0, 1, 5, 30}) {
            EXPECT_EQ(mode_partial_sum(ca.e[i], cb.f[i], K) + mode_sum_tail(ca.e[i], cb.f[i], K), s);
            EXPECT_EQ(mode_partial_sum(cb.f[i], ca.e[i], K) + mode_sum_tail(cb.f[i], ca.e[i], K),
                      mode_sum(cb.f[i], ca.e[i]));
        }
        EXPECT_NE(mode_partial_sum(ca.e[i], cb.f[i], 30), s);
    }
}

TEST(RMatrix, FactorsAreTriangular) {
    auto order = weight_sorted_basis();
    for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{{1, 3}, {frac(1, 2), 2}, {5, -2}}) {
        TOperator A = build_eval_rep(a), B = build_eval_rep(b);
        RFactor E = assemble_RE(A, B), F = assemble_RF(A, B);
        EXPECT_TRUE(is_unipotent_upper(in_basis(E.matrix, order)));
        EXPECT_TRUE(is_unipotent_lower(in_basis(F.matrix, order)));
        EXPECT_FALSE(E.matrix.is_identity());
        // f currents are the transposes of the e currents on C^3
        EXPECT_EQ(F.matrix, E.matrix.transpose());
        EXPECT_TRUE(solve_RH(E, F, A, B).H.matrix.is_diagonal());
    }
}

TEST(RMatrix, SolveCartanAt13) {
    TOperator A = build_eval_rep(1), B = build_eval_rep(3);
    RFactor E = assemble_RE(A, B), F = assemble_RF(A, B);
    CartanSolution H = solve_RH(E, F, A, B);
    EXPECT_EQ(H.nullity, 1);
    EXPECT_EQ(H.scalar, 1);
    std::vector<Rational> diag = {frac(1, 2), 1, 1, frac(3, 4), frac(1, 2), 1, frac(3, 4), frac(3, 4), frac(1, 2)};
    for (int i = 0; i < 9; ++i) EXPECT_EQ(H.H.matrix(i, i), diag[i]) << i;
    QMatrix residual = E.matrix * H.H.matrix * F.matrix - yang_r(1, 3).matrix * H.scalar;
    EXPECT_TRUE(residual.is_zero());
}

TEST(RMatrix, SignFlipHasNoCartanFactor) {
    TOperator A = build_eval_rep(1), B = build_eval_rep(3);
    EXPECT_THROW(solve_RH(assemble_RE(A, B, {1, 3, 2}, 1), assemble_RF(A, B, {2, 3, 1}, 1), A, B), NoCartanSolution);
    EXPECT_THROW(solve_RH(assemble_RE(A, B), assemble_RF(A, B), yang_r(3, 1).matrix), NoCartanSolution);
}

TEST(RMatrix, FactorOrderIsInvisibleOnVectorReps) {
    // on C^3 ⊗ C^3 the products of different root factors vanish, so every order agrees
    TOperator A = build_eval_rep(1), B = build_eval_rep(3);
    EXPECT_EQ(assemble_RE(A, B, {2, 3, 1}).matrix, assemble_RE(A, B).matrix);
    EXPECT_EQ(assemble_RF(A, B, {1, 3, 2}).matrix, assemble_RF(A, B).matrix);
}

TEST(RMatrix, DependsOnDifferenceOnly) {
    for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{{1, 3}, {frac(2, 3), -1}}) {
        TOperator A = build_eval_rep(a), B = build_eval_rep(b);
        RFactor E = assemble_RE(A, B), F = assemble_RF(A, B);
        CartanSolution H = solve_RH(E, F, A, B);
        for (Rational t : {Rational(1), frac(1, 2), Rational(-7)}) {
            if (a + t == 0 || b + t == 0) continue;
            TOperator A2 = build_eval_rep(a + t), B2 = build_eval_rep(b + t);
            RFactor E2 = assemble_RE(A2, B2), F2 = assemble_RF(A2, B2);
            EXPECT_EQ(E2.matrix, E.matrix);
            EXPECT_EQ(F2.matrix, F.matrix);
            EXPECT_EQ(solve_RH(E2, F2, A2, B2).H.matrix, H.H.matrix);
        }
    }
}

TEST(RMatrix, Errors) {
    TOperator A = build_eval_rep(2);
    EXPECT_THROW(assemble_RE(A, A), EqualParameters);
    EXPECT_THROW(assemble_RF(build_eval_rep(0), A), ZeroParameter);
    EXPECT_THROW(yang_r(1, 1), EqualParameters);
    EXPECT_THROW(check_ybe(1, 3, 1), EqualParameters);
    EXPECT_THROW(check_ybe(0, 3, 1), ZeroParameter);
    QMatrix R = assemble_R(2, 5);
    EXPECT_THROW(check_intertwiner(R, A, build_eval_rep(5), {Rational(2)}), PoleCollision);
}

TEST(YangBaxter, Triples) {
    std::vector<std::array<Rational, 3>> triples = {
        {1, 3, 7}, {frac(1, 2), 2, 5}, {2, -1, 3}, {2, -1, 4}, {-3, frac(1, 3), 4}, {5, 7, -2}, {frac(1, 3), frac(-1, 2), 9}};
    for (const auto& t : triples) {
        VerificationReport r = check_ybe(t[0], t[1], t[2]);
        EXPECT_TRUE(r.pass) << t[0] << " " << t[1] << " " << t[2];
    }
}

TEST(YangBaxter, CorruptedEntryFails) {
    auto bad = [](const Rational& x, const Rational& y) {
        QMatrix R = assemble_R(x, y);
        R(1, 3) += frac(1, 5);
        return R;
    };
    VerificationReport r = check_ybe(bad, 1, 3, 7);
    EXPECT_FALSE(r.pass);
    ASSERT_TRUE(r.counterexample.has_value());
    EXPECT_NE(r.counterexample->lhs, r.counterexample->rhs);
    EXPECT_TRUE(check_ybe([](const Rational& x, const Rational& y) { return yang_r(x, y).matrix; }, 1, 3, 7).pass);
}

TEST(Intertwiner, FullRPassesAndCartanIsNeeded) {
    for (auto [a, b] : std::vector<std::pair<Rational, Rational>>{{1, 3}, {frac(1, 2), -2}}) {
        TOperator A = build_eval_rep(a), B = build_eval_rep(b);
        RFactor E = assemble_RE(A, B), F = assemble_RF(A, B);
        QMatrix R = assemble_R(A, B);
        VerificationReport full = check_intertwiner(R, A, B, kGrid);
        EXPECT_TRUE(full.pass);
        EXPECT_EQ(full.samples_used, 9 * static_cast<int>(kGrid.size()));
        VerificationReport no_h = check_intertwiner(E.matrix * F.matrix, A, B, kGrid);
        EXPECT_FALSE(no_h.pass);
        EXPECT_TRUE(no_h.counterexample.has_value());
        // the flipped R intertwines the other way only
        EXPECT_FALSE(check_intertwiner(yang_r(b, a).matrix, A, B, kGrid).pass);
    }
}

TEST(RMatrix, DumpFormat) {
    QMatrix R = yang_r(1, 3).matrix;
    std::string d = R.dump();
    EXPECT_EQ(std::count(d.begin(), d.end(), '\n'), 9);
    EXPECT_EQ(d.substr(0, d.find('\n')), "1/2 0 0 0 0 0 0 0 0");
}
