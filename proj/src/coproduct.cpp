#include "dy/coproduct.hpp"

#include "dy/errors.hpp"

namespace dy {

const std::vector<std::string>& coproduct_formula_ids() {
    static const std::vector<std::string> ids = {"e1", "e2", "e3", "f1", "f2", "f3"};
    return ids;
}

namespace {
const RationalFunction kHalf(frac(1, 2));
}

OpFn nilpotent_series(const OpFn& F1, const OpFn& F3, const OpFn& G1, const OpFn& G3, int cap) {
    int n = F1.dim() * G1.dim();
    OpFn S = OpFn::identity(n);
    // level[i] = (F1^i F3^{L-i}, G1^i G3^{L-i}) for the current level L
    std::vector<std::pair<OpFn, OpFn>> level = {{OpFn::identity(F1.dim()), OpFn::identity(G1.dim())}};
    for (int L = 1;; ++L) {
        std::vector<std::pair<OpFn, OpFn>> next(L + 1);
        for (int i = 0; i <= L; ++i) {
            // extend by F3 when i < L, otherwise by F1
            if (i < L)
                next[i] = {level[i].first * F3, level[i].second * G3};
            else
                next[i] = {level[i - 1].first * F1, level[i - 1].second * G1};
        }
        bool all_zero = true;
        Rational sign = L % 2 ? -1 : 1;
        for (int i = 0; i <= L; ++i) {
            OpFn t = kron(next[i].first, next[i].second);
            if (t.is_zero()) continue;
            all_zero = false;
            S += t * RationalFunction(sign * binomial(L, i));
        }
        if (all_zero) return S;
        if (L >= cap)
            throw NonTerminatingSeries("double sum has nonzero terms at i+j=" + std::to_string(L) + " > " +
                                       std::to_string(cap - 1));
        level = std::move(next);
    }
}

OpFn coproduct_rhs(const std::string& id, const TOperator& Ta, const TOperator& Tb) {
    CurrentSystem A = currents(Ta), B = currents(Tb);
    OpFn Ia = OpFn::identity(A.dim), Ib = OpFn::identity(B.dim);
    int cap = A.dim * B.dim;
    auto sh = [](const OpFn& x) { return x.shift(Rational(1)); };
    if (id == "e1")
        return kron(A.e[0], Ib) + nilpotent_series(sh(A.f[0]), sh(A.f[2]), B.e[0], B.e[2], cap) *
                                      (kron(A.h[0], B.e[0]) + kron(anticommutator(A.h[0], A.f[1]), B.e[2]) * kHalf);
    if (id == "e2")
        return kron(A.e[1], Ib) + nilpotent_series(sh(A.f[1]), sh(A.f3p), B.e[1], B.e3p, cap) *
                                      (kron(A.h[1], B.e[1]) + kron(anticommutator(A.h[1], A.f[0]), B.e3p) * kHalf);
    if (id == "e3")
        return kron(A.e[2], Ib) + nilpotent_series(sh(A.f[0]), sh(A.f[2]), B.e[0], B.e[2], cap) *
                                      (kron(A.h[2], B.e[2]) + kron(anticommutator(A.h[0], A.e[1]), B.e[0]) * kHalf);
    if (id == "f1")
        return kron(Ia, B.f[0]) + (kron(A.f[0], B.h[0]) + kron(A.f[2], anticommutator(B.h[0], B.e[1])) * kHalf) *
                                      nilpotent_series(A.f[0], A.f[2], sh(B.e[0]), sh(B.e[2]), cap);
    if (id == "f2")
        return kron(Ia, B.f[1]) + (kron(A.f[1], B.h[1]) + kron(A.f3p, anticommutator(B.h[1], B.e[0])) * kHalf) *
                                      nilpotent_series(A.f[1], A.f3p, sh(B.e[1]), sh(B.e3p), cap);
    if (id == "f3")
        return kron(Ia, B.f[2]) + (kron(A.f[2], B.h[2]) + kron(A.f[0], anticommutator(B.h[0], B.f[1])) * kHalf) *
                                      nilpotent_series(A.f[0], A.f[2], sh(B.e[0]), sh(B.e[2]), cap);
    throw ConfigError("unknown coproduct formula '" + id + "'");
}

OpFn coproduct_lhs(const std::string& id, const TOperator& Ta, const TOperator& Tb) {
    if (id.size() != 2 || (id[0] != 'e' && id[0] != 'f'))
        throw ConfigError("unknown coproduct formula '" + id + "'");
    return currents(tensor_rep(Ta, Tb)).get(id);
}

std::vector<Rational> coproduct_grid(const std::string& id, const TOperator& Ta, const TOperator& Tb, int n) {
    OpFn l = coproduct_lhs(id, Ta, Tb), r = coproduct_rhs(id, Ta, Tb);
    return sample_values(n, [&](const Rational& x) { return l.has_pole_at(x) || r.has_pole_at(x); });
}

VerificationReport verify_coproduct(const std::string& id, const TOperator& Ta, const TOperator& Tb,
                                    const std::vector<Rational>& grid, Exec exec) {
    VerificationReport rep;
    rep.relation_id = "coproduct." + id;
    OpFn l = coproduct_lhs(id, Ta, Tb), r = coproduct_rhs(id, Ta, Tb);
    for (const Rational& x : grid)
        if (l.has_pole_at(x) || r.has_pole_at(x)) throw PoleCollision("u=" + to_string(x) + " is a pole");
    std::vector<char> bad(grid.size(), 0);
    std::vector<QMatrix> lv(grid.size()), rv(grid.size());
    for_each_index(
        static_cast<int>(grid.size()),
        [&](int k) {
            lv[k] = l.eval(grid[k]);
            rv[k] = r.eval(grid[k]);
            bad[k] = !(lv[k] == rv[k]);
        },
        exec);
    rep.samples_used = static_cast<int>(grid.size());
    for (size_t k = 0; k < grid.size(); ++k)
        if (bad[k]) {
            rep.pass = false;
            rep.counterexample = Counterexample{"u=" + to_string(grid[k]), matrix_to_string(lv[k]), matrix_to_string(rv[k])};
            break;
        }
    return rep;
}

const std::vector<std::string>& low_mode_ids() {
    static const std::vector<std::string> ids = {"e1.0", "e1.1", "f1.1", "h1.1"};
    return ids;
}

VerificationReport verify_low_mode(const std::string& id, const TOperator& Ta, const TOperator& Tb) {
    // (alpha_1, gamma) for gamma = alpha_1, alpha_2, alpha_1 + alpha_2
    static const int inner1[3] = {2, -1, 1};
    VerificationReport rep;
    rep.relation_id = "coproduct.low." + id;
    rep.samples_used = 1;
    CurrentSystem A = currents(Ta), B = currents(Tb);
    QMatrix Ia = QMatrix::identity(Ta.dim()), Ib = QMatrix::identity(Tb.dim());
    auto m = [](const OpFn& x, int k, bool cartan = false) { return current_mode(x, k, cartan); };
    QMatrix got, want;
    if (id == "e1.0") {
        got = m(coproduct_rhs("e1", Ta, Tb), 0);
        want = kron(m(A.e[0], 0), Ib) + kron(Ia, m(B.e[0], 0));
    } else if (id == "e1.1") {
        got = m(coproduct_rhs("e1", Ta, Tb), 1);
        want = kron(m(A.e[0], 1), Ib) + kron(Ia, m(B.e[0], 1)) + kron(m(A.h[0], 0, true), m(B.e[0], 0));
        for (int g = 0; g < 3; ++g) want -= kron(m(A.f[g], 0), commutator(m(B.e[0], 0), m(B.e[g], 0)));
    } else if (id == "f1.1") {
        got = m(coproduct_rhs("f1", Ta, Tb), 1);
        want = kron(m(A.f[0], 1), Ib) + kron(Ia, m(B.f[0], 1)) + kron(m(A.f[0], 0), m(B.h[0], 0, true));
        for (int g = 0; g < 3; ++g) want += kron(commutator(m(A.f[0], 0), m(A.f[g], 0)), m(B.e[g], 0));
    } else if (id == "h1.1") {
        auto htilde = [&](const QMatrix& h1, const QMatrix& h0) { return h1 - h0 * h0 * frac(1, 2); };
        QMatrix dh = commutator(m(coproduct_rhs("e1", Ta, Tb), 1), m(coproduct_rhs("f1", Ta, Tb), 0));
        QMatrix h0 = m(currents(tensor_rep(Ta, Tb)).h[0], 0, true);
        got = htilde(dh, h0);
        want = kron(htilde(m(A.h[0], 1, true), m(A.h[0], 0, true)), Ib) +
               kron(Ia, htilde(m(B.h[0], 1, true), m(B.h[0], 0, true)));
        for (int g = 0; g < 3; ++g) want -= kron(m(A.f[g], 0), m(B.e[g], 0)) * Rational(inner1[g]);
    } else {
        throw ConfigError("unknown low-mode formula " + id);
    }
    if (!(got == want)) {
        rep.pass = false;
        rep.counterexample = Counterexample{"mode " + id, matrix_to_string(got), matrix_to_string(want)};
    }
    return rep;
}

}  // namespace dy
