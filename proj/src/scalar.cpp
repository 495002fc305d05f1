#include "dy/scalar.hpp"

#include <sstream>

#include "dy/errors.hpp"

namespace dy {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view s) {
    std::string str(s);
    auto b = str.find_first_not_of(" \t");
    auto e = str.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty rational");
    str = str.substr(b, e - b + 1);
    if (!str.empty() && str[0] == '+') str.erase(0, 1);
    Rational r;
    if (r.set_str(str, 10) != 0) throw ParseError("bad rational '" + str + "'");
    if (r.get_den() == 0) throw ZeroDenominator("rational '" + str + "'");
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Polynomial Polynomial::X() { return Polynomial(std::vector<Rational>{0, 1}); }

Polynomial Polynomial::linear_root(const Rational& r) {
    return Polynomial(std::vector<Rational>{-r, 1});
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::shift(const Rational& c) const {
    if (c == 0 || c_.size() < 2) return *this;
    // Horner in the shifted variable.
    Polynomial acc;
    Polynomial lin(std::vector<Rational>{c, 1});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Polynomial(*it);
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() < 2) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    Rational inv = 1 / leading();
    return *this * inv;
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c_[i];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Rational m = abs(a);
        if (i == 0 || m != 1) os << m.get_str();
        if (i > 0) os << (i == 0 || m != 1 ? "*" : "") << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
    int db = b.degree();
    std::vector<Rational> rem = a.coeffs();
    if (a.degree() < db) {
        q = {};
        r = a;
        return;
    }
    std::vector<Rational> quo(a.degree() - db + 1);
    Rational inv = 1 / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        if (rem[i] == 0) continue;
        Rational f = rem[i] * inv;
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
    }
    rem.resize(db);
    q = Polynomial(std::move(quo));
    r = Polynomial(std::move(rem));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    Polynomial q, r;
    divmod(a, b, q, r);
    return q;
}

// ---------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = gcd(num, den);
    Polynomial n = exact_div(num, g), d = exact_div(den, g);
    Rational lc = d.leading();
    num_ = n * (1 / lc);
    den_ = d * (1 / lc);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw ZeroDenominator("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::inverse() const { return RationalFunction(1) / *this; }

RationalFunction RationalFunction::shift(const Rational& c) const {
    return RationalFunction(num_.shift(c), den_.shift(c));
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalFunction ratfn_normalize(const Polynomial& num, const Polynomial& den) {
    return RationalFunction(num, den);
}

Rational ratfn_eval(const RationalFunction& r, const Rational& x) {
    Rational d = r.den().eval(x);
    if (d == 0) throw EvaluationAtPole("pole at u=" + to_string(x));
    return r.num().eval(x) / d;
}

// ------------------------------------------------------------------- series

std::vector<Rational> series_reciprocal(const std::vector<Rational>& p, int n) {
    if (p.empty() || p[0] == 0) throw PoleAtExpansionPoint("reciprocal of series with zero constant term");
    std::vector<Rational> inv(n);
    if (n == 0) return inv;
    Rational i0 = 1 / p[0];
    inv[0] = i0;
    for (int k = 1; k < n; ++k) {
        Rational s = 0;
        for (int j = 1; j <= k && j < static_cast<int>(p.size()); ++j) s += p[j] * inv[k - j];
        inv[k] = -s * i0;
    }
    return inv;
}

static std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                        int n) {
    std::vector<Rational> r(n);
    for (int i = 0; i < n && i < static_cast<int>(a.size()); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j < n && j < static_cast<int>(b.size()); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Polynomial polynomial_part(const RationalFunction& r) {
    Polynomial q, rem;
    divmod(r.num(), r.den(), q, rem);
    return q;
}

TruncatedSeries series_expand(const RationalFunction& r, ExpansionPoint point, int order) {
    TruncatedSeries s;
    s.point = point;
    s.order = order;
    if (order < 0) order = 0;
    s.order = order;
    if (point == ExpansionPoint::AtZero) {
        if (r.den().coeff(0) == 0) throw PoleAtExpansionPoint("pole at u=0");
        auto inv = series_reciprocal(r.den().coeffs(), order);
        s.coefficients = series_mul(r.num().coeffs(), inv, order);
        return s;
    }
    Polynomial q, rem;
    divmod(r.num(), r.den(), q, rem);
    int d = r.den().degree();
    // w = 1/u: rem/den = (w^d rem(1/w)) / (w^d den(1/w)).
    std::vector<Rational> Q(d + 1), R(d + 1);
    for (int j = 0; j <= d; ++j) {
        Q[j] = r.den().coeff(d - j);
        R[j] = rem.coeff(d - j);
    }
    auto inv = series_reciprocal(Q, order + 1);
    auto w = series_mul(R, inv, order + 1);
    s.coefficients.assign(w.begin() + 1, w.end());
    return s;
}

Rational power(const Rational& x, long n) {
    Rational r = 1;
    for (long i = 0; i < n; ++i) r *= x;
    return r;
}

Rational binomial(long n, long k) {
    if (k < 0) return 0;
    Rational r = 1;
    for (long i = 0; i < k; ++i) {
        r *= Rational(n - i);
        r /= Rational(i + 1);
    }
    return r;
}

}  // namespace dy
