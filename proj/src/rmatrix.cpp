#include "dy/rmatrix.hpp"

#include <algorithm>
#include <numeric>

#include "dy/errors.hpp"

namespace dy {

namespace {

constexpr const char* kCurrents[] = {"e1", "e2", "e3", "f1", "f2", "f3", "h1", "h2", "h3"};

// The single spectral parameter of an eval rep; nothing for the trivial rep.
void check_params(const TOperator& Ta, const TOperator& Tb) {
    const auto& pa = Ta.space.factor_parameters;
    const auto& pb = Tb.space.factor_parameters;
    for (const auto* p : {&pa, &pb})
        for (const auto& x : *p)
            if (x == 0) throw ZeroParameter("negative modes need a nonzero spectral parameter");
    if (pa.size() == 1 && pb.size() == 1 && pa[0] == pb[0])
        throw EqualParameters("a = b = " + pa[0].get_str());
}

std::pair<Rational, Rational> params(const TOperator& Ta, const TOperator& Tb) {
    Rational a = Ta.space.factor_parameters.empty() ? Rational(0) : Ta.space.factor_parameters[0];
    Rational b = Tb.space.factor_parameters.empty() ? Rational(0) : Tb.space.factor_parameters[0];
    return {a, b};
}

RFactor assemble(FactorKind kind, const TOperator& Ta, const TOperator& Tb, const std::array<int, 3>& order,
                 const Rational& sign) {
    check_params(Ta, Tb);
    CurrentSystem ca = currents(Ta), cb = currents(Tb);
    const int n = Ta.dim() * Tb.dim();
    RFactor r;
    r.kind = kind;
    std::tie(r.a, r.b) = params(Ta, Tb);
    r.matrix = QMatrix::identity(n);
    for (int i : order) {
        const OpFn& x = kind == FactorKind::E ? ca.e[i - 1] : ca.f[i - 1];
        const OpFn& y = kind == FactorKind::E ? cb.f[i - 1] : cb.e[i - 1];
        QMatrix S = mode_sum(x, y);
        // the k-th factors commute and square to zero, so the product is exp of the sum
        QMatrix E = QMatrix::identity(n), term = QMatrix::identity(n);
        for (int p = 1;; ++p) {
            term = term * S * (sign / p);
            if (term.is_zero()) break;
            E += term;
        }
        r.matrix = r.matrix * E;
    }
    return r;
}

QMatrix perm_apply(const QMatrix& P, const QMatrix& m) { return P * m * P; }

}  // namespace

YangR yang_r(const Rational& a, const Rational& b) {
    if (a == b) throw EqualParameters("YangR at a = b");
    YangR r;
    r.a = a;
    r.b = b;
    r.matrix = QMatrix::identity(9) + flip(3, 3) * (Rational(1) / (a - b));
    return r;
}

std::pair<QMatrix, Rational> simple_pole(const OpFn& x) {
    if (x.is_zero()) return {QMatrix::zero(x.dim()), Rational(0)};
    if (x.den().degree() != 1 || x.num_degree() > 0)
        throw ConfigError("current is not of the form N/(u-c)");
    QMatrix N(x.dim(), x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) N(i, j) = x.num(i, j).coeff(0);
    return {N, -x.den().coeff(0)};
}

QMatrix mode_sum(const OpFn& x, const OpFn& y) {
    auto [N, c] = simple_pole(x);
    auto [M, d] = simple_pole(y);
    if (N.is_zero() || M.is_zero()) return QMatrix::zero(x.dim() * y.dim());
    if (d == 0) throw ZeroParameter("pole of the second current at 0");
    if (c == d) throw EqualParameters("poles coincide");
    return kron(N, M) * (Rational(1) / (d - c));
}

QMatrix mode_partial_sum(const OpFn& x, const OpFn& y, int K) {
    QMatrix s = QMatrix::zero(x.dim() * y.dim());
    for (int k = 0; k <= K; ++k) s += kron(current_mode(x, k), current_mode(y, -k - 1));
    return s;
}

QMatrix mode_sum_tail(const OpFn& x, const OpFn& y, int K) {
    auto [N, c] = simple_pole(x);
    auto [M, d] = simple_pole(y);
    if (N.is_zero() || M.is_zero()) return QMatrix::zero(x.dim() * y.dim());
    return mode_sum(x, y) * power(c / d, K + 1);
}

RFactor assemble_RE(const TOperator& Ta, const TOperator& Tb, const std::array<int, 3>& order,
                    const Rational& sign) {
    return assemble(FactorKind::E, Ta, Tb, order, sign);
}

RFactor assemble_RF(const TOperator& Ta, const TOperator& Tb, const std::array<int, 3>& order,
                    const Rational& sign) {
    return assemble(FactorKind::F, Ta, Tb, order, sign);
}

CartanSolution solve_RH(const RFactor& RE, const RFactor& RF, const QMatrix& target) {
    const int n = RE.matrix.rows();
    // unknowns h_0..h_{n-1}, c: Σ_j RE(r,j) h_j RF(j,s) - c T(r,s) = 0
    QMatrix A(n * n, n + 1);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            for (int j = 0; j < n; ++j) A(r * n + s, j) = RE.matrix(r, j) * RF.matrix(j, s);
            A(r * n + s, n) = -target(r, s);
        }
    auto ns = nullspace(A);
    if (ns.empty()) throw NoCartanSolution("only the zero solution");
    const auto& v = ns[0];
    if (v[n] == 0) throw NoCartanSolution("solution with zero scalar");
    CartanSolution out;
    out.nullity = static_cast<int>(ns.size());
    out.H.kind = FactorKind::H;
    out.H.a = RE.a;
    out.H.b = RE.b;
    out.H.matrix = QMatrix::zero(n);
    for (int j = 0; j < n; ++j) out.H.matrix(j, j) = v[j] / v[n];
    out.scalar = 1;
    return out;
}

CartanSolution solve_RH(const RFactor& RE, const RFactor& RF, const TOperator& Ta, const TOperator& Tb) {
    if (Ta.space.factor_parameters.empty() && Tb.space.factor_parameters.empty())
        return solve_RH(RE, RF, QMatrix::identity(RE.matrix.rows()));
    auto [a, b] = params(Ta, Tb);
    return solve_RH(RE, RF, yang_r(a, b).matrix);
}

QMatrix assemble_R(const TOperator& Ta, const TOperator& Tb) {
    RFactor E = assemble_RE(Ta, Tb), F = assemble_RF(Ta, Tb);
    CartanSolution H = solve_RH(E, F, Ta, Tb);
    return E.matrix * H.H.matrix * F.matrix;
}

QMatrix assemble_R(const Rational& a, const Rational& b) { return assemble_R(build_eval_rep(a), build_eval_rep(b)); }

std::vector<int> weight_sorted_basis() {
    std::vector<int> v(9);
    std::iota(v.begin(), v.end(), 0);
    std::stable_sort(v.begin(), v.end(), [](int x, int y) {
        int i = x / 3, j = x % 3, k = y / 3, l = y % 3;
        if (i + j != k + l) return i + j < k + l;
        return i > k;
    });
    return v;
}

QMatrix in_basis(const QMatrix& m, const std::vector<int>& order) {
    QMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(order[i], order[j]);
    return r;
}

bool is_unipotent_upper(const QMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j <= i; ++j)
            if (m(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool is_unipotent_lower(const QMatrix& m) { return is_unipotent_upper(m.transpose()); }

VerificationReport check_ybe(const RBuilder& R, const Rational& a, const Rational& b, const Rational& c) {
    if (a == b || b == c || a == c) throw EqualParameters("YBE needs distinct parameters");
    VerificationReport rep;
    rep.relation_id = "rmatrix.ybe";
    QMatrix I3 = QMatrix::identity(3), P = flip(3, 3);
    QMatrix P23 = kron(I3, P);
    QMatrix R12 = kron(R(a, b), I3), R23 = kron(I3, R(b, c));
    QMatrix R13 = P23 * kron(R(a, c), I3) * P23;
    QMatrix lhs = R12 * R13 * R23, rhs = R23 * R13 * R12;
    rep.samples_used = 1;
    rep.pass = lhs == rhs;
    if (!rep.pass) {
        QMatrix d = lhs - rhs;
        for (int i = 0; i < 27 && !rep.counterexample; ++i)
            for (int j = 0; j < 27; ++j)
                if (d(i, j) != 0) {
                    rep.counterexample = Counterexample{
                        "(" + a.get_str() + "," + b.get_str() + "," + c.get_str() + ") entry " + std::to_string(i) +
                            "," + std::to_string(j),
                        lhs(i, j).get_str(), rhs(i, j).get_str()};
                    break;
                }
    }
    return rep;
}

VerificationReport check_ybe(const Rational& a, const Rational& b, const Rational& c) {
    if (a == 0 || b == 0 || c == 0) throw ZeroParameter("YBE parameters must be nonzero");
    return check_ybe([](const Rational& x, const Rational& y) { return assemble_R(x, y); }, a, b, c);
}

VerificationReport check_intertwiner(const QMatrix& R, const TOperator& Ta, const TOperator& Tb,
                                     const std::vector<Rational>& grid) {
    VerificationReport rep;
    rep.relation_id = "rmatrix.intertwiner";
    CurrentSystem d = currents(tensor_rep(Ta, Tb)), dop = currents(tensor_rep(Tb, Ta));
    QMatrix P = flip(Ta.dim(), Tb.dim());
    for (const char* name : kCurrents) {
        const OpFn& x = d.get(name);
        const OpFn& y = dop.get(name);
        for (const auto& u : grid) {
            if (x.has_pole_at(u) || y.has_pole_at(u))
                throw PoleCollision(std::string(name) + " has a pole at " + u.get_str());
            QMatrix lhs = R * x.eval(u), rhs = perm_apply(P, y.eval(u)) * R;
            ++rep.samples_used;
            if (lhs != rhs) {
                rep.pass = false;
                rep.counterexample = Counterexample{std::string(name) + " at u = " + u.get_str(), lhs.dump(), rhs.dump()};
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace dy
