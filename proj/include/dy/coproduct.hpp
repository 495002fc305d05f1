#pragma once

#include <string>
#include <vector>

#include "dy/gauss.hpp"

namespace dy {

// Formula ids: e1 e2 e3 f1 f2 f3, one per current.
const std::vector<std::string>& coproduct_formula_ids();

// sum_{i,j} (-1)^{i+j} C(i+j,i) F1^i F3^j ⊗ G1^i G3^j, summed level by level
// (L = i+j) until a level vanishes; NonTerminatingSeries if L reaches cap.
OpFn nilpotent_series(const OpFn& F1, const OpFn& F3, const OpFn& G1, const OpFn& G3, int cap);

// Right-hand side of the current coproduct on the space of Ta ⊗ Tb, legs taken in
// the factor reps. The double sum stops once a whole level vanishes; throws
// NonTerminatingSeries if that has not happened by i+j = dim of the tensor space.
OpFn coproduct_rhs(const std::string& formula_id, const TOperator& Ta, const TOperator& Tb);

// The same current extracted from gauss_decompose(tensor_rep(Ta, Tb)).
OpFn coproduct_lhs(const std::string& formula_id, const TOperator& Ta, const TOperator& Tb);

// u samples regular for both sides.
std::vector<Rational> coproduct_grid(const std::string& formula_id, const TOperator& Ta, const TOperator& Tb, int n);

// Throws PoleCollision if a grid point is a pole of either side.
VerificationReport verify_coproduct(const std::string& formula_id, const TOperator& Ta, const TOperator& Tb,
                                    const std::vector<Rational>& grid, Exec exec = default_exec());

// Low modes read off the series: ids e1.0, e1.1, f1.1, h1.1 (h via h~ = h_{1,1} - h_{1,0}^2/2,
// with Δh_{1,1} = [Δe_{1,1}, Δf_{1,0}]). Compared with the primitive part plus the f⊗e corrections.
const std::vector<std::string>& low_mode_ids();
VerificationReport verify_low_mode(const std::string& id, const TOperator& Ta, const TOperator& Tb);

}  // namespace dy
