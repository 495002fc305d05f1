#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dy/scalar.hpp"

namespace dy {

// Dense row-major matrix over Q.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
    static QMatrix identity(int n);
    static QMatrix zero(int n) { return QMatrix(n, n); }
    // Matrix unit with a single 1 at (i, j), zero-based.
    static QMatrix unit(int n, int i, int j);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    bool is_zero() const;
    bool is_identity() const;
    bool is_diagonal() const;

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    QMatrix& operator*=(const Rational& s);
    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator*(QMatrix a, const Rational& s) { return a *= s; }
    friend QMatrix operator*(const Rational& s, QMatrix a) { return a *= s; }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    QMatrix operator-() const { return *this * Rational(-1); }
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    QMatrix transpose() const;
    // Throws SingularT.
    QMatrix inverse() const;

    // Dense dump, one row per line, entries as p/q strings.
    std::string dump() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

inline std::ostream& operator<<(std::ostream& os, const QMatrix& m) { return os << "\n" << m.dump(); }

QMatrix kron(const QMatrix& a, const QMatrix& b);
// Basis of {x : A x = 0}, from the reduced row echelon form.
std::vector<std::vector<Rational>> nullspace(const QMatrix& a);
QMatrix commutator(const QMatrix& a, const QMatrix& b);
QMatrix anticommutator(const QMatrix& a, const QMatrix& b);
// Flip on C^m ⊗ C^n: e_i ⊗ e_j -> e_j ⊗ e_i.
QMatrix flip(int m, int n);

// Operator-valued rational function N(u)/q(u) on an n-dimensional space:
// a matrix of polynomials over one monic common denominator, kept reduced.
class OpFn {
public:
    OpFn() = default;
    explicit OpFn(int n);  // zero
    OpFn(const QMatrix& m);  // NOLINT: constant function
    OpFn(const RationalFunction& r, const QMatrix& m);  // r(u)·m
    static OpFn identity(int n) { return OpFn(QMatrix::identity(n)); }
    static OpFn scalar(int n, const RationalFunction& r) { return OpFn(r, QMatrix::identity(n)); }

    int dim() const { return n_; }
    const Polynomial& den() const { return den_; }
    const Polynomial& num(int i, int j) const { return num_[static_cast<size_t>(i) * n_ + j]; }
    RationalFunction entry(int i, int j) const { return RationalFunction(num(i, j), den_); }

    bool is_zero() const;
    int num_degree() const;

    OpFn operator-() const;
    friend OpFn operator+(const OpFn& a, const OpFn& b);
    friend OpFn operator-(const OpFn& a, const OpFn& b);
    friend OpFn operator*(const OpFn& a, const OpFn& b);
    friend OpFn operator*(const OpFn& a, const RationalFunction& r);
    friend OpFn operator*(const RationalFunction& r, const OpFn& a) { return a * r; }
    OpFn& operator+=(const OpFn& o) { return *this = *this + o; }
    OpFn& operator-=(const OpFn& o) { return *this = *this - o; }
    friend bool operator==(const OpFn& a, const OpFn& b) {
        return a.n_ == b.n_ && a.den_ == b.den_ && a.num_ == b.num_;
    }

    // f(u + c)
    OpFn shift(const Rational& c) const;
    // Throws EvaluationAtPole.
    QMatrix eval(const Rational& x) const;
    // Throws SingularT if not invertible over Q(u).
    OpFn inverse() const;
    OpFn transpose() const;

    // Coefficient of u^d in the polynomial part, d = 0..deg.
    std::vector<QMatrix> polynomial_part() const;
    // Coefficients of u^-1 .. u^-order of the proper part at infinity.
    std::vector<QMatrix> expand_at_infinity(int order) const;
    // Coefficients of u^0 .. u^(order-1); throws PoleAtExpansionPoint.
    std::vector<QMatrix> expand_at_zero(int order) const;

    // Roots of the denominator among the given candidates.
    bool has_pole_at(const Rational& x) const { return den_.eval(x) == 0; }

private:
    friend OpFn opfn_from_parts(int n, std::vector<Polynomial> num, Polynomial den);
    void reduce();
    int n_ = 0;
    std::vector<Polynomial> num_;
    Polynomial den_ = Polynomial(Rational(1));
};

OpFn kron(const OpFn& a, const OpFn& b);
OpFn commutator(const OpFn& a, const OpFn& b);
OpFn anticommutator(const OpFn& a, const OpFn& b);
// Builds N/den from raw parts and reduces.
OpFn opfn_from_parts(int n, std::vector<Polynomial> num, Polynomial den);

}  // namespace dy
