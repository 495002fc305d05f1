#pragma once

#include <string>

#include "dy/rtt.hpp"

namespace dy {

// T = L K U with L unipotent lower, K diagonal, U unipotent upper.
struct GaussFactors {
    OpFn k1, k2, k3;
    OpFn etilde1, etilde2, etilde3;  // U: (1,2), (2,3), (1,3)
    OpFn ftilde1, ftilde2, ftilde3;  // L: (2,1), (3,2), (3,1)
    int dim = 0;
};

enum class Region { Plus, Minus };

struct CurrentSystem {
    int dim = 0;
    OpFn e[3], f[3], h[3];  // index 0..2 for roots 1..3
    OpFn e3p, f3p;
    Region region = Region::Plus;

    // Names: e1 e2 e3 f1 f2 f3 h1 h2 h3 e3p f3p; throws ParseError otherwise.
    const OpFn& get(const std::string& name) const;
};

// Throws SingularLeadingMinor if t11 or k2 is singular.
GaussFactors gauss_decompose(const TOperator& T);
TOperator recompose(const GaussFactors& G);
CurrentSystem currents(const GaussFactors& G);
inline CurrentSystem currents(const TOperator& T) { return currents(gauss_decompose(T)); }

// Mode x_k: for k >= 0 the u^{-k-1} coefficient at infinity; for k = -m-1 < 0
// minus the u^m coefficient at zero. For h currents the constant 1 is dropped.
QMatrix current_mode(const OpFn& current, int k, bool is_cartan = false);

VerificationReport verify_gauss_cw_match(const TOperator& T);
VerificationReport scalar_twist_invariance(const TOperator& T, const RationalFunction& c);
// Symmetrized double brackets [x_{i,k1},[x_{i,k2},x_{j,l}]] for modes in {0,1}.
VerificationReport serre_in_rep(const TOperator& T);

}  // namespace dy
