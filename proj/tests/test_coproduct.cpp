#include <gtest/gtest.h>

#include "dy/coproduct.hpp"
#include "dy/errors.hpp"

using namespace dy;

namespace {

struct Legs {
    TOperator a = build_eval_rep(1), b = build_eval_rep(3);
    CurrentSystem A = currents(a), B = currents(b);
};

QMatrix mode(const OpFn& x, int k, bool cartan = false) { return current_mode(x, k, cartan); }

// (alpha_1, gamma) for gamma = alpha_1, alpha_2, alpha_1 + alpha_2
const int kInner1[3] = {2, -1, 1};

}  // namespace

TEST(Coproduct, AllFormulasOnV1V3) {
    Legs L;
    for (const auto& id : coproduct_formula_ids()) {
        auto grid = coproduct_grid(id, L.a, L.b, 25);
        VerificationReport r = verify_coproduct(id, L.a, L.b, grid);
        EXPECT_TRUE(r.pass) << id;
        EXPECT_EQ(r.samples_used, 25);
        // identity holds as rational functions, not only on the grid
        EXPECT_EQ(coproduct_lhs(id, L.a, L.b), coproduct_rhs(id, L.a, L.b)) << id;
    }
}

TEST(Coproduct, E1OnAdjacentParameters) {
    TOperator a = build_eval_rep(0), b = build_eval_rep(1);
    EXPECT_TRUE(verify_coproduct("e1", a, b, coproduct_grid("e1", a, b, 25)).pass);
    EXPECT_TRUE(verify_coproduct("f3", a, b, coproduct_grid("f3", a, b, 25)).pass);
}

TEST(Coproduct, SwappedLegsFail) {
    // the series only holds with the factor reps in the order of the tensor product
    Legs L;
    OpFn bad = coproduct_rhs("e1", L.b, L.a);
    EXPECT_FALSE(bad == coproduct_lhs("e1", L.a, L.b));
}

TEST(Coproduct, UnknownFormula) {
    Legs L;
    EXPECT_THROW(coproduct_rhs("h1", L.a, L.b), ConfigError);
}

TEST(Coproduct, PoleOnGrid) {
    Legs L;
    EXPECT_THROW(verify_coproduct("e1", L.a, L.b, {Rational(3)}), PoleCollision);
}

TEST(Coproduct, NonTerminatingSeries) {
    OpFn x(QMatrix::unit(2, 0, 1)), one = OpFn::identity(2), zero(2);
    // nilpotent legs: only L = 0, 1 survive
    OpFn s = nilpotent_series(x, zero, x, zero, 4);
    EXPECT_EQ(s, OpFn::identity(4) - kron(x, x));
    EXPECT_THROW(nilpotent_series(one, zero, one, zero, 4), NonTerminatingSeries);
}

TEST(Coproduct, LeadingModeIsPrimitive) {
    Legs L;
    QMatrix I = QMatrix::identity(3);
    for (int i = 0; i < 3; ++i) {
        QMatrix de = mode(coproduct_rhs("e" + std::to_string(i + 1), L.a, L.b), 0);
        EXPECT_EQ(de, kron(mode(L.A.e[i], 0), I) + kron(I, mode(L.B.e[i], 0)));
        QMatrix df = mode(coproduct_rhs("f" + std::to_string(i + 1), L.a, L.b), 0);
        EXPECT_EQ(df, kron(mode(L.A.f[i], 0), I) + kron(I, mode(L.B.f[i], 0)));
    }
}

TEST(Coproduct, FirstModeE11) {
    Legs L;
    QMatrix I = QMatrix::identity(3);
    QMatrix want = kron(mode(L.A.e[0], 1), I) + kron(I, mode(L.B.e[0], 1)) +
                   kron(mode(L.A.h[0], 0, true), mode(L.B.e[0], 0));
    for (int g = 0; g < 3; ++g)
        want -= kron(mode(L.A.f[g], 0), commutator(mode(L.B.e[0], 0), mode(L.B.e[g], 0)));
    EXPECT_EQ(mode(coproduct_rhs("e1", L.a, L.b), 1), want);
}

TEST(Coproduct, FirstModeF11) {
    Legs L;
    QMatrix I = QMatrix::identity(3);
    QMatrix want = kron(mode(L.A.f[0], 1), I) + kron(I, mode(L.B.f[0], 1)) +
                   kron(mode(L.A.f[0], 0), mode(L.B.h[0], 0, true));
    for (int g = 0; g < 3; ++g)
        want += kron(commutator(mode(L.A.f[0], 0), mode(L.A.f[g], 0)), mode(L.B.e[g], 0));
    EXPECT_EQ(mode(coproduct_rhs("f1", L.a, L.b), 1), want);
}

// The primitive-plus-f⊗e form holds for h~_{1,1} = h_{1,1} - h_{1,0}^2/2; the raw mode picks up
// an extra h_{1,0} ⊗ h_{1,0}.
TEST(Coproduct, FirstModeH11) {
    Legs L;
    QMatrix I = QMatrix::identity(3);
    auto htilde = [](const OpFn& h) {
        QMatrix h0 = mode(h, 0, true);
        return mode(h, 1, true) - h0 * h0 * frac(1, 2);
    };
    // h_{1,1} = [e_{1,1}, f_{1,0}], both from the series expansions
    QMatrix dh = commutator(mode(coproduct_rhs("e1", L.a, L.b), 1), mode(coproduct_rhs("f1", L.a, L.b), 0));
    OpFn h12 = currents(tensor_rep(L.a, L.b)).h[0];
    EXPECT_EQ(dh, mode(h12, 1, true));
    QMatrix h0 = mode(h12, 0, true);
    QMatrix lhs = dh - h0 * h0 * frac(1, 2);
    QMatrix want = kron(htilde(L.A.h[0]), I) + kron(I, htilde(L.B.h[0]));
    for (int g = 0; g < 3; ++g) want -= Rational(kInner1[g]) * kron(mode(L.A.f[g], 0), mode(L.B.e[g], 0));
    EXPECT_EQ(lhs, want);
    QMatrix raw = kron(mode(L.A.h[0], 1, true), I) + kron(I, mode(L.B.h[0], 1, true));
    for (int g = 0; g < 3; ++g) raw -= Rational(kInner1[g]) * kron(mode(L.A.f[g], 0), mode(L.B.e[g], 0));
    EXPECT_EQ(dh - raw, kron(mode(L.A.h[0], 0, true), mode(L.B.h[0], 0, true)));
}

TEST(Coproduct, LowModeReportsOnV1V3) {
    Legs L;
    for (const auto& id : low_mode_ids()) EXPECT_TRUE(verify_low_mode(id, L.a, L.b).pass) << id;
    EXPECT_FALSE(verify_low_mode("h1.1", L.a, L.b).counterexample.has_value());
    EXPECT_THROW(verify_low_mode("e2.1", L.a, L.b), ConfigError);
}

