#include "dy/rtt.hpp"

#include <algorithm>
#include <sstream>

#include "dy/errors.hpp"

namespace dy {

TOperator build_eval_rep(const Rational& a, IndexConvention conv) {
    TOperator T;
    T.space = {3, {a}};
    RationalFunction pole(Polynomial(Rational(1)), Polynomial::linear_root(a));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            QMatrix E = conv == IndexConvention::Transposed ? QMatrix::unit(3, j, i) : QMatrix::unit(3, i, j);
            OpFn f(pole, E);
            if (i == j) f = f + OpFn::identity(3);
            T(i, j) = f;
        }
    return T;
}

TOperator trivial_rep() {
    TOperator T;
    T.space = {3, {}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) T(i, j) = i == j ? OpFn::identity(3) : OpFn(3);
    return T;
}

TOperator tensor_rep(const TOperator& T1, const TOperator& T2) {
    TOperator T;
    T.space.dimension = T1.dim() * T2.dim();
    T.space.factor_parameters = T1.space.factor_parameters;
    for (const auto& p : T2.space.factor_parameters) T.space.factor_parameters.push_back(p);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            OpFn s(T.space.dimension);
            for (int k = 0; k < 3; ++k) {
                if (T1(k, j).is_zero() || T2(i, k).is_zero()) continue;
                s = s + kron(T1(k, j), T2(i, k));
            }
            T(i, j) = s;
        }
    return T;
}

std::vector<Rational> sample_values(int n, const std::function<bool(const Rational&)>& reject) {
    std::vector<Rational> out;
    for (long k = 1; static_cast<int>(out.size()) < n; ++k) {
        Rational x = frac(k, 7);
        if (!reject(x)) out.push_back(x);
    }
    return out;
}

std::vector<Rational> standard_poles(const std::vector<Rational>& params) {
    std::vector<Rational> poles;
    for (const auto& p : params)
        for (const Rational& d : {Rational(0), Rational(1), Rational(-1), frac(1, 2), frac(-1, 2)})
            poles.push_back(p + d);
    return poles;
}

Grid make_grid(int n, const std::vector<Rational>& poles) {
    auto vals = sample_values(2 * n, [&](const Rational& x) {
        return std::find(poles.begin(), poles.end(), x) != poles.end();
    });
    Grid g;
    for (int i = 0; i < n; ++i) g.emplace_back(vals[2 * i], vals[2 * i + 1]);
    return g;
}

std::string matrix_to_string(const QMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

void require_regular(const TOperator& T, const Rational& x) {
    for (const auto& f : T.t)
        if (f.has_pole_at(x)) throw PoleCollision("sample u=" + to_string(x) + " hits a pole of T");
}

}  // namespace

VerificationReport check_rtt(const TOperator& T, const Grid& grid, Exec exec) {
    VerificationReport rep;
    rep.relation_id = "rtt";
    rep.samples_used = static_cast<int>(grid.size());
    for (const auto& [u, v] : grid) {
        if (u == v) throw PoleCollision("sample on the diagonal u=v");
        require_regular(T, u);
        require_regular(T, v);
    }
    std::vector<std::optional<Counterexample>> found(grid.size());
    for_each_index(grid.size(), [&](std::size_t s) {
        const auto& [u, v] = grid[s];
        std::array<QMatrix, 9> tu, tv;
        for (int k = 0; k < 9; ++k) {
            tu[k] = T.t[k].eval(u);
            tv[k] = T.t[k].eval(v);
        }
        Rational w = u - v;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l) {
                        QMatrix lhs = commutator(tu[i * 3 + j], tv[k * 3 + l]) * w;
                        QMatrix rhs = -(tu[k * 3 + j] * tv[i * 3 + l] - tv[k * 3 + j] * tu[i * 3 + l]);
                        if (!(lhs == rhs)) {
                            std::ostringstream pt;
                            pt << "u=" << u.get_str() << ",v=" << v.get_str() << ",(i,j,k,l)=(" << i + 1 << ","
                               << j + 1 << "," << k + 1 << "," << l + 1 << ")";
                            found[s] = Counterexample{pt.str(), matrix_to_string(lhs), matrix_to_string(rhs)};
                            return;
                        }
                    }
    }, exec);
    for (auto& f : found)
        if (f) {
            rep.pass = false;
            rep.counterexample = f;
            break;
        }
    return rep;
}

namespace {

int perm_sign(const std::array<int, 3>& p) {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

}  // namespace

OpFn quantum_det(const TOperator& T) {
    std::array<int, 3> p = {0, 1, 2};
    OpFn sum(T.dim());
    do {
        OpFn term = T(0, p[0]).shift(1) * T(1, p[1]) * T(2, p[2]).shift(-1);
        sum = perm_sign(p) > 0 ? sum + term : sum - term;
    } while (std::next_permutation(p.begin(), p.end()));
    return sum;
}

OpFn block_matrix(const TOperator& T) {
    int d = T.dim(), n = 3 * d;
    std::vector<Polynomial> num(static_cast<size_t>(n) * n);
    Polynomial den(Rational(1));
    for (const auto& f : T.t) den = exact_div(den * f.den(), gcd(den, f.den()));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const OpFn& f = T(i, j);
            Polynomial scale = exact_div(den, f.den());
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q)
                    if (!f.num(p, q).is_zero())
                        num[static_cast<size_t>(i * d + p) * n + j * d + q] = f.num(p, q) * scale;
        }
    return opfn_from_parts(n, std::move(num), den);
}

TOperator antipode_T(const TOperator& T) {
    int d = T.dim();
    OpFn inv = block_matrix(T).inverse();
    TOperator S;
    S.space = T.space;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::vector<Polynomial> num(static_cast<size_t>(d) * d);
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q) num[p * d + q] = inv.num(i * d + p, j * d + q);
            S(i, j) = opfn_from_parts(d, std::move(num), inv.den());
        }
    return S;
}

}  // namespace dy
