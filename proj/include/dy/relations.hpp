#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dy/gauss.hpp"

namespace dy {

// S-expression tree over currents. Atoms: e1@u, h3@v, e3p@u (current at a
// variable), e2#0 (mode constant), 0, 1. Operators: comm acomm mul add sub
// neg sq dd (divide by u-v), scale c X, shift c X (u -> u+c).
struct Expr {
    enum class Kind { Current, Mode, Zero, One, Comm, Acomm, Mul, Add, Sub, Neg, Sq, DivDiff, Scale, Shift };
    Kind kind = Kind::Zero;
    std::string name;  // current name
    char var = 'u';
    int mode = 0;
    Rational value;    // scale / shift parameter
    std::vector<Expr> args;
};

Expr parse_expr(std::string_view src);
std::string to_sexpr(const Expr& e);
void collect_currents(const Expr& e, std::vector<std::string>& out);

struct RelationSpec {
    std::string relation_id;
    std::string anchor;  // the relation written out, for auditing
    Expr lhs, rhs;
    bool expect_pass = true;
    std::string note;
};

// Built-in catalog, sorted by relation_id.
const std::vector<RelationSpec>& relation_catalog();
std::vector<RelationSpec> catalog_group(const std::string& prefix);
std::string catalog_to_json(const std::vector<RelationSpec>& specs);
std::vector<RelationSpec> catalog_from_json(const std::string& text);
std::vector<RelationSpec> load_catalog(const std::string& path);

// Deterministic v samples avoiding poles of every current (and its shift).
std::vector<Rational> relation_grid(const CurrentSystem& sys, int n, const std::vector<Rational>& params);

// lhs - rhs as a function of u, v fixed at each sample; Pass iff it vanishes.
// su supplies the u-atoms, sv the v-atoms.
VerificationReport verify_relation(const RelationSpec& spec, const CurrentSystem& su, const CurrentSystem& sv,
                                   const std::vector<Rational>& vgrid, Exec exec = default_exec());
inline VerificationReport verify_relation(const RelationSpec& spec, const CurrentSystem& sys,
                                          const std::vector<Rational>& vgrid, Exec exec = default_exec()) {
    return verify_relation(spec, sys, sys, vgrid, exec);
}

OpFn eval_expr(const Expr& e, const CurrentSystem& su, const CurrentSystem& sv, const Rational& v);

}  // namespace dy
