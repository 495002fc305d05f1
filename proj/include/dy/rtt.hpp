#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dy/matrix.hpp"
#include "dy/parallel.hpp"

namespace dy {

struct RepSpace {
    int dimension = 3;
    std::vector<Rational> factor_parameters;
};

// t_ij(u), 0-based indices, each an operator on the rep space.
struct TOperator {
    RepSpace space;
    std::array<OpFn, 9> t;

    int dim() const { return space.dimension; }
    const OpFn& operator()(int i, int j) const { return t[i * 3 + j]; }
    OpFn& operator()(int i, int j) { return t[i * 3 + j]; }
};

// Positive roots indexed 1 = α1, 2 = α2, 3 = α1+α2.
struct RootData {
    static constexpr int cartan[2][2] = {{2, -1}, {-1, 2}};
    static int simple_inner(int i, int j) { return cartan[i - 1][j - 1]; }
    // (α_i, γ) for simple i and positive root γ.
    static int inner(int i, int gamma) {
        if (gamma == 3) return simple_inner(i, 1) + simple_inner(i, 2);
        return simple_inner(i, gamma);
    }
};

struct Counterexample {
    std::string point;
    std::string lhs;
    std::string rhs;
};

struct VerificationReport {
    std::string relation_id;
    bool pass = true;
    int samples_used = 0;
    std::optional<Counterexample> counterexample;
    std::string note;
};

enum class IndexConvention {
    Transposed,  // t_ij - δ_ij carries E_ji; the convention that passes RTT
    Direct,      // E_ij, kept for the regression test
};

TOperator build_eval_rep(const Rational& a, IndexConvention conv = IndexConvention::Transposed);
// t_ij = δ_ij on C^3.
TOperator trivial_rep();
// (i,j) entry Σ_k t1_kj ⊗ t2_ik; the first tensor leg is T1's space.
TOperator tensor_rep(const TOperator& T1, const TOperator& T2);

// Deterministic sample values 1/7, 2/7, ... skipping rejected values.
std::vector<Rational> sample_values(int n, const std::function<bool(const Rational&)>& reject);
// Standard pole set {p, p±1, p±1/2} of the factor parameters.
std::vector<Rational> standard_poles(const std::vector<Rational>& params);
using Grid = std::vector<std::pair<Rational, Rational>>;
// Pairs with all coordinates distinct, avoiding the given poles.
Grid make_grid(int n, const std::vector<Rational>& poles);

VerificationReport check_rtt(const TOperator& T, const Grid& grid, Exec exec = default_exec());

// Signed sum with shifts u+1, u, u-1.
OpFn quantum_det(const TOperator& T);
// Matrix inverse of T(u) over operator-valued functions; throws SingularT.
TOperator antipode_T(const TOperator& T);

// Block matrix with block (i,j) = t_ij, i.e. T(u) on C^3 ⊗ V.
OpFn block_matrix(const TOperator& T);

std::string matrix_to_string(const QMatrix& m);

}  // namespace dy
