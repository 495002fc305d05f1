#include "dy/hopf.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "dy/errors.hpp"
#include "dy/rtt.hpp"

namespace dy {

// Tensor2

Tensor2 Tensor2::pure(const NCPoly& a, const NCPoly& b) {
    Tensor2 t;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) t.add(wa, wb, ca * cb);
    return t;
}

void Tensor2::add(const Word& a, const Word& b, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace({a, b}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}
Tensor2& Tensor2::operator-=(const Tensor2& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

Tensor2 operator*(const Tensor2& a, const Tensor2& b) {
    Tensor2 r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            Word l = ka.first, rr = ka.second;
            l.insert(l.end(), kb.first.begin(), kb.first.end());
            rr.insert(rr.end(), kb.second.begin(), kb.second.end());
            r.add(l, rr, ca * cb);
        }
    return r;
}

Tensor2 operator*(Tensor2 a, const Rational& c) {
    if (c == 0) return {};
    for (auto& [k, x] : a.terms_) x *= c;
    return a;
}

std::string Tensor2::dump() const {
    std::ostringstream os;
    for (const auto& [k, c] : terms_)
        os << to_string(c) << " " << word_to_string(k.first) << " | " << word_to_string(k.second) << "\n";
    return os.str();
}

std::pair<int, int> word_weight(const Word& w) {
    int a = 0, b = 0;
    for (const auto& g : w) {
        if (g.family == Family::H) continue;
        int s = g.family == Family::E ? 1 : -1;
        if (g.root != 2) a += s;
        if (g.root != 1) b += s;
    }
    return {a, b};
}

Half word_half(const Word& w) {
    if (w.empty()) return Half::Unit;
    bool pos = false, neg = false;
    for (const auto& g : w) (g.mode >= 0 ? pos : neg) = true;
    if (pos && neg) throw ConfigError("word " + word_to_string(w) + " mixes Y+ and Y- modes");
    return pos ? Half::Plus : Half::Minus;
}

// Generator pairing

namespace {

Rational half_inner(int i, int j) { return Rational(RootData::simple_inner(i, j)) / 2; }

void require_halves(const ModeGenerator& x, const ModeGenerator& y) {
    if (x.mode < 0 || y.mode >= 0)
        throw ConfigError("pairing takes a Y+ generator and a Y- generator, got " + x.to_string() + ", " +
                          y.to_string());
}

}  // namespace

Rational generator_pairing(const ModeGenerator& x, const ModeGenerator& y) {
    require_halves(x, y);
    const int k = x.mode, m = -y.mode - 1;
    if ((x.family == Family::E && y.family == Family::F) || (x.family == Family::F && y.family == Family::E))
        return x.root == y.root && k == m ? Rational(-1) : Rational(0);
    if (x.family == Family::H && y.family == Family::H) {
        if (m > k) return 0;
        Rational b = half_inner(x.root, y.root);
        return -2 * b * binomial(k, m) * power(b, k - m);
    }
    return 0;
}

Rational generator_pairing_oracle(const ModeGenerator& x, const ModeGenerator& y) {
    require_halves(x, y);
    const int k = x.mode, m = -y.mode - 1;
    RationalFunction K;
    if (x.family == Family::H && y.family == Family::H) {
        Rational b = half_inner(x.root, y.root);
        K = RationalFunction(Polynomial::linear_root(-b), Polynomial::linear_root(b));
    } else if (x.family != y.family && x.family != Family::H && y.family != Family::H && x.root == y.root) {
        K = RationalFunction(Polynomial(Rational(1)), Polynomial::X());
    } else {
        return 0;
    }
    // [v^m] K(u - v) = (-1)^m K^(m)(u) / m!
    Rational fact = 1;
    for (int i = 0; i < m; ++i) {
        Polynomial p = K.num(), q = K.den();
        K = RationalFunction(p.derivative() * q - p * q.derivative(), q * q);
        fact *= i + 1;
    }
    TruncatedSeries s = series_expand(K, ExpansionPoint::AtInfinity, k + 1);
    Rational c = s.coefficients[k] / fact;
    if (m % 2) c = -c;
    return -c;
}

namespace {

struct HBlock {
    const Word& x;
    const Word& y;
    std::vector<std::vector<Rational>> beta;
    std::vector<std::vector<char>> inZ;

    // Coefficient of prod_b v_b^{m_b} in prod over Z of (v_b + beta)^{n_ab}, summed
    // over n_ab with sum_b (n_ab + 1) = k_a + 1 in each row.
    Rational rows(size_t a, std::vector<std::vector<int>>& n) {
        if (a == x.size()) return columns(n);
        std::vector<size_t> cols;
        for (size_t b = 0; b < y.size(); ++b)
            if (inZ[a][b]) cols.push_back(b);
        int budget = x[a].mode + 1 - static_cast<int>(cols.size());
        if (budget < 0) return 0;
        Rational s = 0;
        compose(a, cols, 0, budget, n, s);
        return s;
    }
    void compose(size_t a, const std::vector<size_t>& cols, size_t i, int left, std::vector<std::vector<int>>& n,
                 Rational& acc) {
        if (i + 1 == cols.size()) {
            n[a][cols[i]] = left;
            acc += rows(a + 1, n);
            return;
        }
        for (int t = 0; t <= left; ++t) {
            n[a][cols[i]] = t;
            compose(a, cols, i + 1, left - t, n, acc);
        }
    }
    Rational columns(const std::vector<std::vector<int>>& n) {
        Rational r = 1;
        for (size_t b = 0; b < y.size(); ++b) {
            Polynomial p(Rational(1));
            for (size_t a = 0; a < x.size(); ++a)
                if (inZ[a][b])
                    for (int t = 0; t < n[a][b]; ++t) p = p * Polynomial::linear_root(-beta[a][b]);
            r *= p.coeff(-y[b].mode - 1);
            if (r == 0) return 0;
        }
        for (size_t a = 0; a < x.size(); ++a)
            for (size_t b = 0; b < y.size(); ++b)
                if (inZ[a][b]) r *= 2 * beta[a][b];
        return r;
    }
};

}  // namespace

Rational h_block_pairing(const Word& x, const Word& y) {
    for (const auto& g : x)
        if (g.family != Family::H || g.mode < 0) throw ConfigError("h_block_pairing: " + word_to_string(x));
    for (const auto& g : y)
        if (g.family != Family::H || g.mode >= 0) throw ConfigError("h_block_pairing: " + word_to_string(y));
    if (x.empty() || y.empty()) return x.empty() && y.empty() ? 1 : 0;
    const size_t n = x.size(), m = y.size();
    HBlock hb{x, y, std::vector<std::vector<Rational>>(n, std::vector<Rational>(m)),
              std::vector<std::vector<char>>(n, std::vector<char>(m, 0))};
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < m; ++b) hb.beta[a][b] = half_inner(x[a].root, y[b].root);
    // <prod P_a, prod A_b> = (-1)^m sum over Z covering all rows and columns of prod_Z L_ab
    Rational total = 0;
    const unsigned cells = static_cast<unsigned>(n * m);
    for (unsigned long mask = 1; mask < (1ul << cells); ++mask) {
        std::vector<char> row(n, 0), col(m, 0);
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < m; ++b) {
                hb.inZ[a][b] = (mask >> (a * m + b)) & 1;
                if (hb.inZ[a][b]) row[a] = col[b] = 1;
            }
        bool cover = true;
        for (char c : row) cover = cover && c;
        for (char c : col) cover = cover && c;
        if (!cover) continue;
        std::vector<std::vector<int>> nn(n, std::vector<int>(m, 0));
        total += hb.rows(0, nn);
    }
    return m % 2 ? -total : total;
}

bool pairing_support_ok(const Word& x, const Word& y) {
    return -word_degree(y) <= word_degree(x) + static_cast<int>(x.size());
}

// HopfData

HopfData::HopfData(int window, int depth)
    : K_(window),
      D_(depth),
      plus_(window, Strategy::Leftmost, Order::Plus),
      minus_(window, Strategy::Leftmost, Order::Minus, -depth) {
    if (depth > window) throw ConfigError("depth must not exceed the mode window");
}

NCPoly HopfData::reduce(Store s, const NCPoly& p) {
    if (s == Store::Plus) return plus_.straighten(p);
    if (s == Store::Minus) return minus_.straighten(p);
    NCPoly r;
    for (const auto& [w, c] : p.terms())
        if (word_degree(w) >= -D_) r.add(w, c);
    return r;
}

Tensor2 HopfData::reduce(Store s, const Tensor2& t) {
    Tensor2 r;
    if (s == Store::Free) {
        for (const auto& [k, c] : t.terms())
            if (word_degree(k.first) >= -D_ && word_degree(k.second) >= -D_) r.add(k.first, k.second, c);
        return r;
    }
    ModeAlgebra& alg = s == Store::Plus ? plus_ : minus_;
    for (const auto& [k, c] : t.terms()) {
        NCPoly a = alg.straighten_word(k.first);
        if (a.is_zero()) continue;
        r += Tensor2::pure(a, alg.straighten_word(k.second)) * c;
    }
    return r;
}

Tensor2 HopfData::normalize(const Tensor2& t, Half left, Half right) {
    Tensor2 r;
    for (const auto& [k, c] : t.terms()) {
        NCPoly a = algebra(left).straighten_word(k.first);
        if (a.is_zero()) continue;
        r += Tensor2::pure(a, algebra(right).straighten_word(k.second)) * c;
    }
    return r;
}

HopfData::Series HopfData::current(Store s, const std::string& name) {
    ModeAlgebra& alg = s == Store::Plus ? plus_ : minus_;
    const int N = length(s);
    Series c(N);
    auto mode = [&](int k) -> NCPoly {
        if (name == "h3") return reduce(s, alg.h3(k));
        if (name == "e3p") return reduce(s, alg.e3p(k));
        if (name == "f3p") return reduce(s, alg.f3p(k));
        int r = name[1] - '0';
        if (name[0] == 'e') return alg.e(r, k);
        if (name[0] == 'f') return alg.f(r, k);
        return alg.h(r, k);
    };
    if (s == Store::Plus)
        for (int n = 1; n < N; ++n) c[n] = mode(n - 1);
    else
        for (int n = 0; n < N; ++n) c[n] = -mode(-n - 1);
    if (name[0] == 'h') c[0] += NCPoly(Rational(1));
    return c;
}

HopfData::Series HopfData::smul(Store s, const Series& a, const Series& b) {
    Series r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size(); ++j)
            if (!a[i].is_zero() && !b[j].is_zero()) r[i + j] += a[i] * b[j];
    for (auto& x : r) x = reduce(s, x);
    return r;
}

HopfData::Series HopfData::shift1(Store s, const Series& a) {
    const int N = static_cast<int>(a.size());
    Series r(N);
    for (int t = 0; t < N; ++t) {
        if (s == Store::Plus) {
            for (int j = 0; j <= t; ++j) r[t] += a[j] * binomial(-j, t - j);
        } else {
            for (int m = t; m < N; ++m) r[t] += a[m] * binomial(m, t);
        }
    }
    return r;
}

HopfData::TSeries HopfData::tpure(const Series& a, const Series& b) {
    TSeries r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size(); ++j)
            if (!a[i].is_zero() && !b[j].is_zero()) r[i + j] += Tensor2::pure(a[i], b[j]);
    return r;
}

namespace {

// Legwise product without the terms whose legs fall below the floor. Y- letters
// only lower the degree, so those terms would be cut afterwards anyway.
Tensor2 mul_cut(const Tensor2& a, const Tensor2& b, int floor) {
    struct T {
        const Tensor2::Key* k;
        const Rational* c;
        int d1, d2;
    };
    auto index = [](const Tensor2& t) {
        std::vector<T> v;
        for (const auto& [k, c] : t.terms()) v.push_back({&k, &c, word_degree(k.first), word_degree(k.second)});
        return v;
    };
    std::vector<T> ia = index(a), ib = index(b);
    Tensor2 r;
    for (const auto& x : ia)
        for (const auto& y : ib) {
            if (x.d1 + y.d1 < floor || x.d2 + y.d2 < floor) continue;
            Word l = x.k->first, rr = x.k->second;
            l.insert(l.end(), y.k->first.begin(), y.k->first.end());
            rr.insert(rr.end(), y.k->second.begin(), y.k->second.end());
            r.add(l, rr, *x.c * *y.c);
        }
    return r;
}

}  // namespace

HopfData::TSeries HopfData::tmul(Store s, const TSeries& a, const TSeries& b) {
    TSeries r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size(); ++j) {
            if (a[i].is_zero() || b[j].is_zero()) continue;
            r[i + j] += s == Store::Plus ? a[i] * b[j] : mul_cut(a[i], b[j], -D_);
        }
    for (auto& x : r) x = reduce(s, x);
    return r;
}

HopfData::TSeries HopfData::nilpotent(Store s, const Series& F1, const Series& F3, const Series& G1,
                                      const Series& G3) {
    const size_t N = F1.size();
    TSeries P = tpure(F1, G1), Q = tpure(F3, G3);
    TSeries one(N);
    one[0].add({}, {}, 1);
    TSeries S = one;
    std::vector<TSeries> level = {one};
    for (int L = 1;; ++L) {
        std::vector<TSeries> next(L + 1);
        for (int i = 0; i <= L; ++i) next[i] = i < L ? tmul(s, level[i], Q) : tmul(s, level[i - 1], P);
        bool all_zero = true;
        Rational sign = L % 2 ? -1 : 1;
        for (int i = 0; i <= L; ++i)
            for (size_t n = 0; n < N; ++n)
                if (!next[i][n].is_zero()) {
                    all_zero = false;
                    S[n] += next[i][n] * (sign * binomial(L, i));
                }
        if (all_zero) return S;
        if (L > 64) throw NonTerminatingSeries("mode series did not truncate");
        level = std::move(next);
    }
}

void HopfData::build(Store s) {
    Cache& cache = cache_[static_cast<int>(s)];
    if (cache.built) return;
    const int N = length(s);
    std::map<std::string, Series> c;
    for (const char* n : {"e1", "e2", "e3", "f1", "f2", "f3", "h1", "h2", "h3", "e3p", "f3p"}) c[n] = current(s, n);
    Series one(N);
    one[0] = NCPoly(Rational(1));
    auto ac = [&](const Series& a, const Series& b) {
        Series r = smul(s, a, b), t = smul(s, b, a);
        for (size_t i = 0; i < r.size(); ++i) r[i] += t[i];
        return r;
    };
    auto sh = [&](const std::string& n) { return shift1(s, c[n]); };
    auto half = [](TSeries t) {
        for (auto& v : t) v = v * frac(1, 2);
        return t;
    };
    auto plus = [](TSeries a, const TSeries& b) {
        for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
    };
    std::map<std::string, TSeries> d;
    {
        TSeries S = nilpotent(s, sh("f1"), sh("f3"), c["e1"], c["e3"]);
        d["e1"] = plus(tpure(c["e1"], one),
                       tmul(s, S, plus(tpure(c["h1"], c["e1"]), half(tpure(ac(c["h1"], c["f2"]), c["e3"])))));
        d["e3"] = plus(tpure(c["e3"], one),
                       tmul(s, S, plus(tpure(c["h3"], c["e3"]), half(tpure(ac(c["h1"], c["e2"]), c["e1"])))));
    }
    {
        TSeries S = nilpotent(s, sh("f2"), sh("f3p"), c["e2"], c["e3p"]);
        d["e2"] = plus(tpure(c["e2"], one),
                       tmul(s, S, plus(tpure(c["h2"], c["e2"]), half(tpure(ac(c["h2"], c["f1"]), c["e3p"])))));
    }
    {
        TSeries S = nilpotent(s, c["f1"], c["f3"], sh("e1"), sh("e3"));
        d["f1"] = plus(tpure(one, c["f1"]),
                       tmul(s, plus(tpure(c["f1"], c["h1"]), half(tpure(c["f3"], ac(c["h1"], c["e2"])))), S));
        d["f3"] = plus(tpure(one, c["f3"]),
                       tmul(s, plus(tpure(c["f3"], c["h3"]), half(tpure(c["f1"], ac(c["h1"], c["f2"])))), S));
    }
    {
        TSeries S = nilpotent(s, c["f2"], c["f3p"], sh("e2"), sh("e3p"));
        d["f2"] = plus(tpure(one, c["f2"]),
                       tmul(s, plus(tpure(c["f2"], c["h2"]), half(tpure(c["f3p"], ac(c["h2"], c["e1"])))), S));
    }
    auto mode_of = [&](int n) { return s == Store::Plus ? n - 1 : -n - 1; };
    const int first = s == Store::Plus ? 1 : 0;
    for (int r = 1; r <= 3; ++r)
        for (int n = first; n < N; ++n) {
            Rational sign = s == Store::Plus ? 1 : -1;
            cache.gen[gen_e(r, mode_of(n))] = d["e" + std::to_string(r)][n] * sign;
            cache.gen[gen_f(r, mode_of(n))] = d["f" + std::to_string(r)][n] * sign;
        }
    // Δh_{i,l} = [e_{i,0}⊗1 + 1⊗e_{i,0}, Δf_{i,l}]
    for (int r = 1; r <= 2; ++r)
        for (int n = first; n < N; ++n) {
            NCPoly e0(gen_e(r, 0));
            Tensor2 t;
            for (const auto& [k, cf] : cache.gen.at(gen_f(r, mode_of(n))).terms()) {
                NCPoly a = NCPoly::word(k.first), b = NCPoly::word(k.second);
                t += Tensor2::pure(comm(e0, a), b) * cf;
                t += Tensor2::pure(a, comm(e0, b)) * cf;
            }
            t = reduce(s, t);
            if (s == Store::Minus)
                for (const auto& [k, cf] : t.terms()) {
                    (void)cf;
                    if (word_half(k.first) == Half::Plus || word_half(k.second) == Half::Plus)
                        throw std::logic_error("ad e0 left a Y+ letter in " + word_to_string(k.first) + " | " +
                                               word_to_string(k.second));
                }
            cache.gen[gen_h(r, mode_of(n))] = t;
        }
    cache.built = true;
}

const Tensor2& HopfData::cached(Store s, const ModeGenerator& g) {
    build(s);
    const Cache& cache = cache_[static_cast<int>(s)];
    auto it = cache.gen.find(g);
    if (it == cache.gen.end())
        throw WindowExhausted("no coproduct for " + g.to_string() + " at window " + std::to_string(K_) + ", depth " +
                              std::to_string(D_));
    return it->second;
}

Tensor2 HopfData::word_coproduct(Store s, const Word& w) {
    if (w.empty()) {
        Tensor2 t;
        t.add({}, {}, 1);
        return t;
    }
    // free legs may hold e_{i,0}, which is primitive
    auto letter = [&](const ModeGenerator& g) -> const Tensor2& {
        return cached(s == Store::Free && g.mode >= 0 ? Store::Plus : s, g);
    };
    if (w.size() == 1) return letter(w[0]);
    auto& memo = cache_[static_cast<int>(s)].word;
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    Word head(w.begin(), w.end() - 1);
    Tensor2 r = reduce(s, word_coproduct(s, head) * letter(w.back()));
    memo[w] = r;
    return r;
}

const Tensor2& HopfData::coproduct(const ModeGenerator& g) {
    return cached(g.mode >= 0 ? Store::Plus : Store::Minus, g);
}

Tensor2 HopfData::coproduct(const Word& w) {
    Half h = word_half(w);
    return word_coproduct(h == Half::Minus ? Store::Minus : Store::Plus, w);
}

Tensor2 HopfData::coproduct(const NCPoly& p) {
    Tensor2 r;
    for (const auto& [w, c] : p.terms()) r += coproduct(w) * c;
    return r;
}

Tensor2 HopfData::coproduct_free(const Word& w) {
    bool neg = false;
    for (const auto& g : w) neg = neg || g.mode < 0;
    return word_coproduct(neg ? Store::Free : Store::Plus, w);
}

NCPoly HopfData::antipode_inv(const ModeGenerator& g) {
    if (g.mode < 0) throw ConfigError("antipode_inv is implemented on Y+ only");
    if (auto it = sinv_.find(g); it != sinv_.end()) return it->second;
    if (!sinv_busy_.insert(g).second) throw std::logic_error("cyclic antipode recursion at " + g.to_string());
    // sum S^-1(x'') x' = 0 over Δg = sum x' ⊗ x''
    const Tensor2& d = coproduct(g);
    Rational c0 = 0;
    NCPoly rest;
    for (const auto& [k, c] : d.terms()) {
        if (k.first.empty() && k.second == Word{g}) {
            c0 = c;
            continue;
        }
        rest += antipode_inv(k.second) * NCPoly::word(k.first) * c;
    }
    sinv_busy_.erase(g);
    if (c0 == 0) throw std::logic_error("coproduct of " + g.to_string() + " lacks 1 ⊗ g");
    NCPoly r = plus_.straighten(rest * (Rational(-1) / c0));
    sinv_[g] = r;
    return r;
}

NCPoly HopfData::antipode_inv(const Word& w) {
    NCPoly r(Rational(1));
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = r * antipode_inv(*it);
    return plus_.straighten(r);
}

NCPoly HopfData::antipode_inv(const NCPoly& p) {
    NCPoly r;
    for (const auto& [w, c] : p.terms()) r += antipode_inv(w) * c;
    return r;
}

Rational HopfData::pair(const Word& x, const Word& y) {
    if (x.empty()) return y.empty() ? 1 : 0;
    if (y.empty()) return 0;
    if (word_half(x) != Half::Plus || word_half(y) != Half::Minus)
        throw ConfigError("pair takes a Y+ word and a Y- word: " + word_to_string(x) + ", " + word_to_string(y));
    auto wx = word_weight(x), wy = word_weight(y);
    if (wx.first + wy.first != 0 || wx.second + wy.second != 0) return 0;
    if (x.size() == 1 && y.size() == 1) return generator_pairing(x[0], y[0]);
    auto key = std::make_pair(x, y);
    if (auto it = pair_memo_.find(key); it != pair_memo_.end()) return it->second;
    Rational r = 0;
    if (y.size() >= 2) {
        Word y1 = {y[0]}, rest(y.begin() + 1, y.end());
        const Tensor2 dx = coproduct(x);
        for (const auto& [k, c] : dx.terms()) {
            if (k.first.empty()) continue;
            Rational p1 = pair(k.first, y1);
            if (p1 != 0) r += c * p1 * pair(k.second, rest);
        }
    } else {
        Word x1 = {x[0]}, rest(x.begin() + 1, x.end());
        for (const auto& [k, c] : coproduct(y[0]).terms()) {
            if (k.second.empty()) continue;
            Rational p2 = pair(x1, k.second);
            if (p2 != 0) r += c * p2 * pair(rest, k.first);
        }
    }
    pair_memo_[key] = r;
    return r;
}

Rational HopfData::pair(const NCPoly& x, const NCPoly& y) {
    Rational r = 0;
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) r += cx * cy * pair(wx, wy);
    return r;
}

Rational HopfData::pair(const Tensor2& x, const Tensor2& y) {
    Rational r = 0;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            Rational a = pair(kx.first, ky.first);
            if (a != 0) r += cx * cy * a * pair(kx.second, ky.second);
        }
    return r;
}

namespace {

// Split a normal-ordered word into its three family blocks.
std::array<Word, 3> blocks(const Word& w) {
    std::array<Word, 3> b;
    for (const auto& g : w) b[static_cast<int>(g.family)].push_back(g);
    return b;
}

}  // namespace

Rational HopfData::pair_triangular(const NCPoly& x, const NCPoly& y) {
    NCPoly xs = plus_.straighten(x), ys = minus_.straighten(y);
    Rational r = 0;
    for (const auto& [wx, cx] : xs.terms()) {
        auto bx = blocks(wx);
        for (const auto& [wy, cy] : ys.terms()) {
            auto by = blocks(wy);
            Rational v = h_block_pairing(bx[1], by[1]);
            if (v == 0) continue;
            v *= pair(bx[0], by[2]);
            if (v == 0) continue;
            v *= pair(bx[2], by[0]);
            r += cx * cy * v;
        }
    }
    return r;
}

// Y- part of a straightened leg. Free h coproducts carry e_{i,0} letters; in the
// F < H < E order they end up trailing, and y- y+ -> y- eps(y+) is well defined.
NCPoly HopfData::minus_part(const Word& w) {
    NCPoly r;
    const NCPoly full = minus_.straighten_word(w);
    for (const auto& [v, c] : full.terms()) {
        size_t i = 0;
        while (i < v.size() && v[i].mode < 0) ++i;
        if (i == v.size()) {
            r.add(v, c);
            continue;
        }
        for (size_t j = i; j < v.size(); ++j)
            if (v[j].mode < 0) throw std::logic_error("Y+ letter before a Y- letter in " + word_to_string(v));
    }
    return r;
}

Tensor2 HopfData::cross_relation(const NCPoly& a, const NCPoly& b) {
    Tensor2 out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            if (word_half(wa) == Half::Minus || word_half(wb) == Half::Plus)
                throw ConfigError("cross_relation takes a in Y+ and b in Y-");
            Tensor2 da = coproduct(wa), db = coproduct_free(wb);
            for (const auto& [ka, xa] : da.terms()) {
                NCPoly s3 = antipode_inv(ka.second);
                for (const auto& [kb, xb] : db.terms()) {
                    Rational s = pair(s3, minus_part(kb.second));
                    if (s == 0) continue;
                    Tensor2 dA = coproduct(ka.first), dB = coproduct_free(kb.first);
                    for (const auto& [k1, y1] : dA.terms())
                        for (const auto& [k2, y2] : dB.terms()) {
                            Rational p = pair(NCPoly::word(k1.first), minus_part(k2.first));
                            if (p != 0) out.add(k2.second, k1.second, ca * cb * xa * xb * s * y1 * y2 * p);
                        }
                }
            }
        }
    return out;
}

QMatrix HopfData::cross_image(const Tensor2& t, RepImage& img) {
    QMatrix r = QMatrix::zero(img.dim());
    for (const auto& [k, c] : t.terms()) r += img(NCPoly::word(k.first)) * img(NCPoly::word(k.second)) * c;
    return r;
}

Tensor2 e1e2_cross_closed_form(int k, int l, ModeAlgebra& minus, ModeAlgebra& plus) {
    if (k < 0 || l >= 0) throw ConfigError("e1e2_cross_closed_form needs k >= 0 > l");
    const int m = -l - 1;
    const Rational mh = frac(-1, 2);
    auto G = [&](int n, int q) -> Rational {  // [u^{-n-1} v^q] 1/(u-v+1/2)
        if (q < 0 || q > n) return 0;
        return binomial(n, q) * power(mh, n - q);
    };
    Tensor2 rhs;
    NCPoly one(Rational(1));
    for (int p = 0; p <= m; ++p) {
        Rational g = G(k, m - p);
        if (g != 0) rhs += Tensor2::pure(minus.e3p(-p - 1), one) * (-g);
    }
    for (int j = 0; j < k; ++j) {
        Rational g = G(k - 1 - j, m);
        if (g != 0) rhs += Tensor2::pure(one, plus.e(3, j)) * g;
    }
    rhs.add({gen_e(2, l)}, {gen_e(1, k)}, -1);
    for (int j = 0; j < k; ++j)
        for (int p = 0; p <= m; ++p) {
            Rational g = G(k - 1 - j, m - p);
            if (g != 0) rhs.add({gen_e(2, -p - 1)}, {gen_e(1, j)}, g);
        }
    return rhs * Rational(-1);
}

}  // namespace dy
