#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dy {

using Rational = mpq_class;

// Canonicalized p/q; mpq_class(p, q) alone does not reduce.
inline Rational frac(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

// "p/q" form, integers printed without denominator.
std::string to_string(const Rational& x);
Rational parse_rational(std::string_view s);

// Dense, lowest degree first. The zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
    Polynomial(long c) : Polynomial(Rational(c)) {}

    static Polynomial X();
    // u - r
    static Polynomial linear_root(const Rational& r);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& leading() const { return c_.back(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Rational eval(const Rational& x) const;
    // p(u + c)
    Polynomial shift(const Rational& c) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    std::string to_string(const std::string& var = "u") const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Quotient and remainder; b must be nonzero.
void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
// Monic gcd; gcd(0,0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

// num/den with monic denominator and coprime parts.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}  // NOLINT
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}    // NOLINT
    RationalFunction(long c) : RationalFunction(Rational(c)) {}            // NOLINT

    // Canonicalizing constructor; throws ZeroDenominator.
    RationalFunction(const Polynomial& num, const Polynomial& den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction inverse() const;
    RationalFunction shift(const Rational& c) const;

    std::string to_string(const std::string& var = "u") const;

private:
    Polynomial num_, den_;
};

RationalFunction ratfn_normalize(const Polynomial& num, const Polynomial& den);
Rational ratfn_eval(const RationalFunction& r, const Rational& x);

enum class ExpansionPoint { AtInfinity, AtZero };

// AtInfinity: coefficients of u^-1, u^-2, ...; AtZero: u^0, u^1, ...
struct TruncatedSeries {
    ExpansionPoint point = ExpansionPoint::AtInfinity;
    int order = 0;
    std::vector<Rational> coefficients;
};

// At infinity only the proper part is expanded; see polynomial_part.
TruncatedSeries series_expand(const RationalFunction& r, ExpansionPoint point, int order);
Polynomial polynomial_part(const RationalFunction& r);

// Power-series reciprocal of p (p(0) != 0), n coefficients.
std::vector<Rational> series_reciprocal(const std::vector<Rational>& p, int n);

Rational binomial(long n, long k);  // generalized for negative n
Rational power(const Rational& x, long n);  // n >= 0

}  // namespace dy
