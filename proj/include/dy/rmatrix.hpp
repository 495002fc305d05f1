#pragma once

#include <array>
#include <functional>
#include <vector>

#include "dy/gauss.hpp"

namespace dy {

enum class FactorKind { E, F, H };

struct RFactor {
    FactorKind kind = FactorKind::E;
    QMatrix matrix;
    Rational a, b;
};

// 1 + P/(a-b) on C^3 ⊗ C^3.
struct YangR {
    QMatrix matrix;
    Rational a, b;
};
YangR yang_r(const Rational& a, const Rational& b);

// x(u) = N/(u-c): returns (N, c). Zero currents give N = 0. Throws ConfigError otherwise.
std::pair<QMatrix, Rational> simple_pole(const OpFn& x);

// Σ_{k>=0} x_k ⊗ y_{-k-1} with x from the first rep, y from the second.
// Closed form N⊗M/(d-c) for x = N/(u-c), y = M/(v-d).
QMatrix mode_sum(const OpFn& x, const OpFn& y);
// Same sum over k <= K from the mode images.
QMatrix mode_partial_sum(const OpFn& x, const OpFn& y, int K);
// (c/d)^{K+1} N⊗M/(d-c), what the partial sum still misses.
QMatrix mode_sum_tail(const OpFn& x, const OpFn& y, int K);

// exp(sign Σ_k e_{i,k}⊗f_{i,-k-1}) multiplied in the given root order (default 1, 3, 2).
// sign and order are exposed for the negative controls.
RFactor assemble_RE(const TOperator& Ta, const TOperator& Tb, const std::array<int, 3>& order = {1, 3, 2},
                    const Rational& sign = -1);
// exp(sign Σ_k f_{i,k}⊗e_{i,-k-1}) in order 2, 3, 1.
RFactor assemble_RF(const TOperator& Ta, const TOperator& Tb, const std::array<int, 3>& order = {2, 3, 1},
                    const Rational& sign = -1);

struct CartanSolution {
    RFactor H;
    Rational scalar;  // RE H RF = scalar * target; normalized to 1
    int nullity = 0;  // dimension of the solution space in (H, scalar)
};
// Diagonal H with RE·H·RF proportional to target. Throws NoCartanSolution.
CartanSolution solve_RH(const RFactor& RE, const RFactor& RF, const QMatrix& target);
// Target YangR(a,b); the identity when both reps are trivial.
CartanSolution solve_RH(const RFactor& RE, const RFactor& RF, const TOperator& Ta, const TOperator& Tb);

// RE·H·RF for eval reps at a, b.
QMatrix assemble_R(const Rational& a, const Rational& b);
QMatrix assemble_R(const TOperator& Ta, const TOperator& Tb);

// e_i⊗e_j (index 3i+j) sorted by total weight, then first leg descending.
std::vector<int> weight_sorted_basis();
QMatrix in_basis(const QMatrix& m, const std::vector<int>& order);
bool is_unipotent_upper(const QMatrix& m);
bool is_unipotent_lower(const QMatrix& m);

using RBuilder = std::function<QMatrix(const Rational&, const Rational&)>;
// R12 R13 R23 = R23 R13 R12 on (C^3)^{⊗3}.
VerificationReport check_ybe(const Rational& a, const Rational& b, const Rational& c);
VerificationReport check_ybe(const RBuilder& R, const Rational& a, const Rational& b, const Rational& c);

// R Δ(x)(u) = Δ^op(x)(u) R at each grid point for all currents x.
VerificationReport check_intertwiner(const QMatrix& R, const TOperator& Ta, const TOperator& Tb,
                                     const std::vector<Rational>& grid);

}  // namespace dy
