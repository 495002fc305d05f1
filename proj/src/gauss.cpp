#include "dy/gauss.hpp"

#include "dy/errors.hpp"

namespace dy {

const OpFn& CurrentSystem::get(const std::string& name) const {
    if (name == "e3p") return e3p;
    if (name == "f3p") return f3p;
    if (name.size() == 2 && name[1] >= '1' && name[1] <= '3') {
        int i = name[1] - '1';
        switch (name[0]) {
            case 'e': return e[i];
            case 'f': return f[i];
            case 'h': return h[i];
        }
    }
    throw ParseError("unknown current '" + name + "'");
}

namespace {

OpFn inverse_or_throw(const OpFn& x, const char* what) {
    try {
        return x.inverse();
    } catch (const SingularT&) {
        throw SingularLeadingMinor(std::string(what) + " is not invertible");
    }
}

const Rational kHalf = frac(1, 2);

}  // namespace

GaussFactors gauss_decompose(const TOperator& T) {
    GaussFactors G;
    G.dim = T.dim();
    G.k1 = T(0, 0);
    OpFn k1i = inverse_or_throw(G.k1, "t11");
    G.etilde1 = k1i * T(0, 1);
    G.etilde3 = k1i * T(0, 2);
    G.ftilde1 = T(1, 0) * k1i;
    G.ftilde3 = T(2, 0) * k1i;
    G.k2 = T(1, 1) - T(1, 0) * G.etilde1;
    OpFn k2i = inverse_or_throw(G.k2, "k2");
    G.etilde2 = k2i * (T(1, 2) - T(1, 0) * G.etilde3);
    G.ftilde2 = (T(2, 1) - G.ftilde3 * T(0, 1)) * k2i;
    G.k3 = T(2, 2) - G.ftilde3 * G.k1 * G.etilde3 - G.ftilde2 * G.k2 * G.etilde2;
    return G;
}

TOperator recompose(const GaussFactors& G) {
    int d = G.dim;
    OpFn one = OpFn::identity(d), zero(d);
    OpFn L[3][3] = {{one, zero, zero}, {G.ftilde1, one, zero}, {G.ftilde3, G.ftilde2, one}};
    OpFn K[3] = {G.k1, G.k2, G.k3};
    OpFn U[3][3] = {{one, G.etilde1, G.etilde3}, {zero, one, G.etilde2}, {zero, zero, one}};
    TOperator T;
    T.space.dimension = d;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            OpFn s(d);
            for (int k = 0; k <= std::min(i, j); ++k) s = s + L[i][k] * K[k] * U[k][j];
            T(i, j) = s;
        }
    return T;
}

CurrentSystem currents(const GaussFactors& G) {
    CurrentSystem c;
    c.dim = G.dim;
    c.e[0] = G.etilde1;
    c.e[1] = G.etilde2.shift(kHalf);
    c.e[2] = G.etilde3;
    c.f[0] = G.ftilde1;
    c.f[1] = G.ftilde2.shift(kHalf);
    c.f[2] = G.ftilde3;
    c.h[0] = G.k1.inverse() * G.k2;
    c.h[1] = (G.k2.inverse() * G.k3).shift(kHalf);
    c.h[2] = c.h[0] * c.h[1] +
             anticommutator(anticommutator(c.h[0], c.e[1]), c.f[1]) * RationalFunction(frac(1, 4));
    c.e3p = anticommutator(c.e[0], c.e[1]) * RationalFunction(kHalf) - c.e[2];
    c.f3p = anticommutator(c.f[0], c.f[1]) * RationalFunction(kHalf) - c.f[2];
    return c;
}

QMatrix current_mode(const OpFn& current, int k, bool is_cartan) {
    if (k >= 0) return current.expand_at_infinity(k + 1)[k];
    int m = -k - 1;
    QMatrix c = current.expand_at_zero(m + 1)[m];
    if (is_cartan && m == 0) c -= QMatrix::identity(current.dim());
    return -c;
}

VerificationReport verify_gauss_cw_match(const TOperator& T) {
    VerificationReport r;
    r.relation_id = "gauss.cw_match";
    GaussFactors G = gauss_decompose(T);
    CurrentSystem c = currents(G);
    OpFn e20(current_mode(c.e[1], 0)), f20(current_mode(c.f[1], 0));
    OpFn t11i = T(0, 0).inverse();
    OpFn h3_gauss = t11i * (T(2, 2) - T(2, 0) * t11i * T(0, 2));
    struct Item {
        const char* name;
        OpFn lhs, rhs;
    } items[] = {
        {"e3 = -[e1(u), e_{2,0}]", G.etilde3, -commutator(c.e[0], e20)},
        {"f3 = [f1(u), f_{2,0}]", G.ftilde3, commutator(c.f[0], f20)},
        {"h3 Gauss form = h3 defining formula", h3_gauss, c.h[2]},
    };
    for (auto& it : items) {
        if (it.lhs == it.rhs) continue;
        r.pass = false;
        r.counterexample = Counterexample{it.name, it.lhs.entry(0, 0).to_string(), it.rhs.entry(0, 0).to_string()};
        break;
    }
    return r;
}

VerificationReport scalar_twist_invariance(const TOperator& T, const RationalFunction& c) {
    VerificationReport r;
    r.relation_id = "gauss.scalar_twist";
    TOperator cT = T;
    for (auto& f : cT.t) f = f * c;
    CurrentSystem a = currents(T), b = currents(cT);
    static const char* names[] = {"e1", "e2", "e3", "f1", "f2", "f3", "h1", "h2", "h3"};
    for (const char* n : names)
        if (!(a.get(n) == b.get(n))) {
            r.pass = false;
            r.counterexample = Counterexample{n, a.get(n).entry(0, 0).to_string(), b.get(n).entry(0, 0).to_string()};
            break;
        }
    return r;
}

VerificationReport serre_in_rep(const TOperator& T) {
    VerificationReport r;
    r.relation_id = "gauss.serre_rep";
    CurrentSystem c = currents(T);
    for (int fam = 0; fam < 2; ++fam)
        for (int i = 0; i < 2; ++i) {
            const OpFn& xi = fam == 0 ? c.e[i] : c.f[i];
            const OpFn& xj = fam == 0 ? c.e[1 - i] : c.f[1 - i];
            for (int k1 = 0; k1 < 2; ++k1)
                for (int k2 = 0; k2 < 2; ++k2)
                    for (int l = 0; l < 2; ++l) {
                        QMatrix a = current_mode(xi, k1), b = current_mode(xi, k2), z = current_mode(xj, l);
                        QMatrix s = commutator(a, commutator(b, z)) + commutator(b, commutator(a, z));
                        if (!s.is_zero()) {
                            r.pass = false;
                            r.counterexample = Counterexample{
                                std::string(fam ? "f" : "e") + std::to_string(i + 1) + " modes " + std::to_string(k1) +
                                    "," + std::to_string(k2) + "," + std::to_string(l),
                                matrix_to_string(s), "0"};
                            return r;
                        }
                    }
        }
    return r;
}

}  // namespace dy
