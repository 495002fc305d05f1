#include "dy/matrix.hpp"

#include <sstream>

#include "dy/errors.hpp"

namespace dy {

// ------------------------------------------------------------------ QMatrix

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::unit(int n, int i, int j) {
    QMatrix m(n, n);
    m(i, j) = 1;
    return m;
}

bool QMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool QMatrix::is_identity() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool QMatrix::is_diagonal() const {
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) r(i, j) += x * b(k, j);
        }
    return r;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
    QMatrix a = m;
    const int R = a.rows(), C = a.cols();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < C && row < R; ++col) {
        int piv = -1;
        for (int i = row; i < R; ++i)
            if (a(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < C; ++j) std::swap(a(piv, j), a(row, j));
        Rational p = 1 / a(row, col);
        for (int j = 0; j < C; ++j) a(row, j) *= p;
        for (int i = 0; i < R; ++i) {
            if (i == row || a(i, col) == 0) continue;
            Rational f = a(i, col);
            for (int j = 0; j < C; ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    std::vector<bool> is_pivot(C, false);
    for (int c : pivots) is_pivot[c] = true;
    for (int free = 0; free < C; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(C);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix QMatrix::inverse() const {
    int n = r_;
    QMatrix a = *this, inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) throw SingularT("singular rational matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rational p = 1 / a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) *= p;
            inv(col, j) *= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rational f = a(i, col);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::string QMatrix::dump() const {
    std::ostringstream os;
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
        os << "\n";
    }
    return os.str();
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
    QMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    if (b(k, l) != 0) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }
QMatrix anticommutator(const QMatrix& a, const QMatrix& b) { return a * b + b * a; }

QMatrix flip(int m, int n) {
    QMatrix p(m * n, m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) p(j * m + i, i * n + j) = 1;
    return p;
}

// --------------------------------------------------------------------- OpFn

OpFn::OpFn(int n) : n_(n), num_(static_cast<size_t>(n) * n) {}

OpFn::OpFn(const QMatrix& m) : n_(m.rows()), num_(static_cast<size_t>(m.rows()) * m.rows()) {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) num_[static_cast<size_t>(i) * n_ + j] = Polynomial(m(i, j));
}

OpFn::OpFn(const RationalFunction& r, const QMatrix& m) : OpFn(m) {
    for (auto& p : num_) p = p * r.num();
    den_ = r.den();
    reduce();
}

OpFn opfn_from_parts(int n, std::vector<Polynomial> num, Polynomial den) {
    if (den.is_zero()) throw ZeroDenominator("operator function with zero denominator");
    OpFn f;
    f.n_ = n;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    f.reduce();
    return f;
}

void OpFn::reduce() {
    bool all_zero = true;
    for (const auto& p : num_)
        if (!p.is_zero()) {
            all_zero = false;
            break;
        }
    if (all_zero) {
        den_ = Polynomial(Rational(1));
        return;
    }
    if (den_.degree() > 0) {
        Polynomial g = den_;
        for (const auto& p : num_) {
            if (p.is_zero()) continue;
            g = gcd(g, p);
            if (g.degree() == 0) break;
        }
        if (g.degree() > 0) {
            den_ = exact_div(den_, g);
            for (auto& p : num_)
                if (!p.is_zero()) p = exact_div(p, g);
        }
    }
    Rational lc = den_.leading();
    if (lc != 1) {
        Rational inv = 1 / lc;
        den_ *= inv;
        for (auto& p : num_) p *= inv;
    }
}

bool OpFn::is_zero() const {
    for (const auto& p : num_)
        if (!p.is_zero()) return false;
    return true;
}

int OpFn::num_degree() const {
    int d = -1;
    for (const auto& p : num_) d = std::max(d, p.degree());
    return d;
}

OpFn OpFn::operator-() const {
    OpFn r = *this;
    for (auto& p : r.num_) p = -p;
    return r;
}

namespace {

OpFn combine(const OpFn& a, const OpFn& b, bool subtract) {
    int n = a.dim();
    std::vector<Polynomial> num(static_cast<size_t>(n) * n);
    if (a.den() == b.den()) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                num[i * n + j] = subtract ? a.num(i, j) - b.num(i, j) : a.num(i, j) + b.num(i, j);
        return opfn_from_parts(n, std::move(num), a.den());
    }
    Polynomial g = gcd(a.den(), b.den());
    Polynomial fa = exact_div(b.den(), g), fb = exact_div(a.den(), g);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Polynomial x = a.num(i, j).is_zero() ? Polynomial() : a.num(i, j) * fa;
            Polynomial y = b.num(i, j).is_zero() ? Polynomial() : b.num(i, j) * fb;
            num[i * n + j] = subtract ? x - y : x + y;
        }
    return opfn_from_parts(n, std::move(num), a.den() * fa);
}

}  // namespace

OpFn operator+(const OpFn& a, const OpFn& b) { return combine(a, b, false); }
OpFn operator-(const OpFn& a, const OpFn& b) { return combine(a, b, true); }

OpFn operator*(const OpFn& a, const OpFn& b) {
    int n = a.dim();
    std::vector<Polynomial> num(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Polynomial& x = a.num(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                const Polynomial& y = b.num(k, j);
                if (!y.is_zero()) num[i * n + j] += x * y;
            }
        }
    return opfn_from_parts(n, std::move(num), a.den() * b.den());
}

OpFn operator*(const OpFn& a, const RationalFunction& r) {
    if (r.is_zero()) return OpFn(a.dim());
    std::vector<Polynomial> num(static_cast<size_t>(a.dim()) * a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) num[i * a.dim() + j] = a.num(i, j) * r.num();
    return opfn_from_parts(a.dim(), std::move(num), a.den() * r.den());
}

OpFn OpFn::shift(const Rational& c) const {
    if (c == 0) return *this;
    std::vector<Polynomial> num(num_.size());
    for (size_t i = 0; i < num_.size(); ++i) num[i] = num_[i].shift(c);
    return opfn_from_parts(n_, std::move(num), den_.shift(c));
}

QMatrix OpFn::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw EvaluationAtPole("operator pole at u=" + to_string(x));
    Rational inv = 1 / d;
    QMatrix m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Polynomial& p = num(i, j);
            if (!p.is_zero()) m(i, j) = p.eval(x) * inv;
        }
    return m;
}

OpFn OpFn::transpose() const {
    std::vector<Polynomial> t(num_.size());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t[j * n_ + i] = num(i, j);
    return opfn_from_parts(n_, std::move(t), den_);
}

OpFn OpFn::inverse() const {
    int n = n_;
    // (N/q)^-1 = q · N^-1; N^-1 by Gauss-Jordan over Q(u).
    std::vector<RationalFunction> a(static_cast<size_t>(n) * n), inv(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[i * n + j] = RationalFunction(num(i, j));
            inv[i * n + j] = RationalFunction(i == j ? 1 : 0);
        }
    for (int col = 0; col < n; ++col) {
        int piv = -1, best = 1 << 30;
        for (int i = col; i < n; ++i) {
            const auto& e = a[i * n + col];
            if (e.is_zero()) continue;
            int cost = e.num().degree() + e.den().degree();
            if (cost < best) {
                best = cost;
                piv = i;
            }
        }
        if (piv < 0) throw SingularT("operator matrix singular over Q(u)");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a[piv * n + j], a[col * n + j]);
                std::swap(inv[piv * n + j], inv[col * n + j]);
            }
        RationalFunction p = a[col * n + col].inverse();
        for (int j = 0; j < n; ++j) {
            if (!a[col * n + j].is_zero()) a[col * n + j] *= p;
            if (!inv[col * n + j].is_zero()) inv[col * n + j] *= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i * n + col].is_zero()) continue;
            RationalFunction f = a[i * n + col];
            for (int j = 0; j < n; ++j) {
                if (!a[col * n + j].is_zero()) a[i * n + j] -= f * a[col * n + j];
                if (!inv[col * n + j].is_zero()) inv[i * n + j] -= f * inv[col * n + j];
            }
        }
    }
    // Common denominator of the inverse entries.
    Polynomial l(Rational(1));
    for (const auto& e : inv) {
        if (e.is_zero()) continue;
        l = exact_div(l * e.den(), gcd(l, e.den()));
    }
    std::vector<Polynomial> nm(static_cast<size_t>(n) * n);
    for (size_t k = 0; k < inv.size(); ++k) {
        if (inv[k].is_zero()) continue;
        nm[k] = inv[k].num() * exact_div(l, inv[k].den()) * den_;
    }
    return opfn_from_parts(n, std::move(nm), l);
}

std::vector<QMatrix> OpFn::polynomial_part() const {
    std::vector<QMatrix> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Polynomial q, r;
            divmod(num(i, j), den_, q, r);
            for (int d = 0; d <= q.degree(); ++d) {
                while (static_cast<int>(out.size()) <= d) out.emplace_back(n_, n_);
                out[d](i, j) = q.coeff(d);
            }
        }
    return out;
}

std::vector<QMatrix> OpFn::expand_at_infinity(int order) const {
    std::vector<QMatrix> out(order, QMatrix(n_, n_));
    if (order <= 0) return out;
    int d = den_.degree();
    std::vector<Rational> Q(d + 1);
    for (int j = 0; j <= d; ++j) Q[j] = den_.coeff(d - j);
    auto inv = series_reciprocal(Q, order + 1);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (num(i, j).is_zero()) continue;
            Polynomial q, r;
            divmod(num(i, j), den_, q, r);
            // coefficient of w^m in R(w)/Q(w), R_k = r_{d-k}
            for (int m = 1; m <= order; ++m) {
                Rational s = 0;
                for (int k = 1; k <= m && k <= d; ++k) {
                    Rational rk = r.coeff(d - k);
                    if (rk != 0) s += rk * inv[m - k];
                }
                out[m - 1](i, j) = s;
            }
        }
    return out;
}

std::vector<QMatrix> OpFn::expand_at_zero(int order) const {
    std::vector<QMatrix> out(order, QMatrix(n_, n_));
    if (order <= 0) return out;
    if (den_.coeff(0) == 0) throw PoleAtExpansionPoint("operator pole at u=0");
    auto inv = series_reciprocal(den_.coeffs(), order);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Polynomial& p = num(i, j);
            if (p.is_zero()) continue;
            for (int m = 0; m < order; ++m) {
                Rational s = 0;
                for (int k = 0; k <= m && k <= p.degree(); ++k)
                    if (p.coeff(k) != 0) s += p.coeff(k) * inv[m - k];
                out[m](i, j) = s;
            }
        }
    return out;
}

OpFn kron(const OpFn& a, const OpFn& b) {
    int n = a.dim() * b.dim();
    std::vector<Polynomial> num(static_cast<size_t>(n) * n);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            if (a.num(i, j).is_zero()) continue;
            for (int k = 0; k < b.dim(); ++k)
                for (int l = 0; l < b.dim(); ++l)
                    if (!b.num(k, l).is_zero())
                        num[static_cast<size_t>(i * b.dim() + k) * n + j * b.dim() + l] = a.num(i, j) * b.num(k, l);
        }
    return opfn_from_parts(n, std::move(num), a.den() * b.den());
}

OpFn commutator(const OpFn& a, const OpFn& b) { return a * b - b * a; }
OpFn anticommutator(const OpFn& a, const OpFn& b) { return a * b + b * a; }

}  // namespace dy
