#include "dy/modes.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "dy/errors.hpp"

namespace dy {

int ModeGenerator::root_rank() const {
    switch (family) {
        case Family::E: return root == 1 ? 0 : root == 3 ? 1 : 2;
        case Family::H: return root - 1;
        case Family::F: return root == 2 ? 0 : root == 3 ? 1 : 2;
    }
    return 0;
}

bool operator<(const ModeGenerator& a, const ModeGenerator& b) {
    if (a.block() != b.block()) return a.block() < b.block();
    if (a.root_rank() != b.root_rank()) return a.root_rank() < b.root_rank();
    return a.mode < b.mode;
}

bool pbw_before(const ModeGenerator& a, const ModeGenerator& b, Order o) {
    if (o == Order::Plus) return a < b;
    // Minus: negative modes first, so mixed words come out as y- y+
    if ((a.mode < 0) != (b.mode < 0)) return a.mode < 0;
    if (a.mode >= 0 || a.family == b.family) return a < b;
    return b.block() < a.block();
}

std::string ModeGenerator::to_string() const {
    const char c = family == Family::E ? 'e' : family == Family::H ? 'h' : 'f';
    return std::string(1, c) + std::to_string(root) + "(" + std::to_string(mode) + ")";
}

ModeGenerator gen_e(int root, int mode) { return {Family::E, root, mode}; }
ModeGenerator gen_f(int root, int mode) { return {Family::F, root, mode}; }
ModeGenerator gen_h(int root, int mode) {
    if (root != 1 && root != 2) throw ConfigError("h generators have root 1 or 2; h3 is an abbreviation");
    return {Family::H, root, mode};
}

std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + w[i].to_string();
    return s;
}

int word_degree(const Word& w) {
    int d = 0;
    for (const auto& g : w) d += g.mode;
    return d;
}

bool word_is_sorted(const Word& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] < w[i]) return false;
    return true;
}

// NCPoly

NCPoly::NCPoly(const Rational& c) {
    if (c != 0) terms_[{}] = c;
}
NCPoly::NCPoly(const ModeGenerator& g) { terms_[{g}] = 1; }

NCPoly NCPoly::word(Word w, const Rational& c) {
    NCPoly p;
    p.add(w, c);
    return p;
}

void NCPoly::add(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}
NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    return r;
}

NCPoly operator*(NCPoly a, const Rational& c) {
    if (c == 0) return {};
    for (auto& [w, x] : a.terms_) x *= c;
    return a;
}

std::string NCPoly::dump() const {
    std::ostringstream os;
    for (const auto& [w, c] : terms_) os << to_string(c) << " " << word_to_string(w) << "\n";
    return os.str();
}

NCPoly comm(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }
NCPoly acomm(const NCPoly& a, const NCPoly& b) { return a * b + b * a; }

// ModeAlgebra

namespace {

const Rational kHalf = frac(1, 2);
const Rational kQuarter = frac(1, 4);

// Sum over a+b = m-1 with a,b >= 0 (m >= 0), or minus the sum over a,b < 0 (m < 0).
template <class Fn>
NCPoly conv_sum(int m, Fn term) {
    NCPoly s;
    if (m >= 0) {
        for (int a = 0; a <= m - 1; ++a) s += term(a, m - 1 - a);
        return s;
    }
    for (int a = m; a <= -1; ++a) s += term(a, m - 1 - a);
    return -s;
}

struct Progress {
    std::set<std::pair<ModeGenerator, ModeGenerator>>& set;
    std::pair<ModeGenerator, ModeGenerator> key;
    ~Progress() { set.erase(key); }
};

}  // namespace

void ModeAlgebra::check(int mode) const {
    if (mode < -K_ || mode > K_)
        throw WindowExhausted("mode " + std::to_string(mode) + " outside [-" + std::to_string(K_) + "," +
                              std::to_string(K_) + "]");
}

NCPoly ModeAlgebra::e(int root, int mode) const {
    check(mode);
    return NCPoly(gen_e(root, mode));
}
NCPoly ModeAlgebra::f(int root, int mode) const {
    check(mode);
    return NCPoly(gen_f(root, mode));
}
NCPoly ModeAlgebra::h(int root, int mode) const {
    check(mode);
    return NCPoly(gen_h(root, mode));
}

NCPoly ModeAlgebra::conv(Family fam, int r1, int r2, int m) const {
    return conv_sum(m, [&](int a, int b) {
        return fam == Family::E ? e(r1, a) * e(r2, b) : f(r1, a) * f(r2, b);
    });
}

NCPoly ModeAlgebra::symconv_e12(int m) const {
    return conv_sum(m, [&](int a, int b) { return acomm(e(1, a), e(2, b)); });
}
NCPoly ModeAlgebra::symconv_f12(int m) const {
    return conv_sum(m, [&](int a, int b) { return acomm(f(1, a), f(2, b)); });
}

NCPoly ModeAlgebra::e3p(int m) const { return symconv_e12(m) * kHalf - e(3, m); }
NCPoly ModeAlgebra::f3p(int m) const { return symconv_f12(m) * kHalf - f(3, m); }

NCPoly ModeAlgebra::h3(int m) const {
    NCPoly r = h(1, m) + h(2, m);
    r += conv_sum(m, [&](int a, int b) { return h(1, a) * h(2, b) + acomm(e(2, a), f(2, b)) * kHalf; });
    // triple sum over a+b+c = m-2, all >= 0 or all < 0
    NCPoly t;
    if (m >= 0) {
        for (int a = 0; a <= m - 2; ++a)
            for (int b = 0; a + b <= m - 2; ++b) t += acomm(acomm(h(1, a), e(2, b)), f(2, m - 2 - a - b));
    } else {
        for (int a = m; a <= -1; ++a)
            for (int b = m; b <= -1; ++b) {
                int c = m - 2 - a - b;
                if (c < 0 && c >= m) t += acomm(acomm(h(1, a), e(2, b)), f(2, c));
            }
    }
    return r + t * kQuarter;
}

NCPoly ModeAlgebra::bracket_e2_e3p(int k, int l) {
    auto key = std::make_pair(k, l);
    if (auto it = e2e3p_.find(key); it != e2e3p_.end()) return it->second;
    NCPoly r;
    if (l == 0)
        r = conv_sum(k, [&](int a, int b) { return e(2, a) * e3p(b); });
    else if (l > 0)
        r = bracket_e2_e3p(k + 1, l - 1) - (e(2, k) * e3p(l - 1) + e(2, l - 1) * e3p(k));
    else
        r = bracket_e2_e3p(k - 1, l + 1) + e(2, k - 1) * e3p(l) + e(2, l) * e3p(k - 1);
    r = straighten(r);
    e2e3p_[key] = r;
    return r;
}

NCPoly ModeAlgebra::bracket_f2_f3p(int k, int l) {
    auto key = std::make_pair(k, l);
    if (auto it = f2f3p_.find(key); it != f2f3p_.end()) return it->second;
    NCPoly r;
    if (l == 0)
        r = -conv_sum(k, [&](int a, int b) { return f(2, a) * f3p(b); });
    else if (l > 0)
        r = bracket_f2_f3p(k + 1, l - 1) + f(2, k) * f3p(l - 1) + f(2, l - 1) * f3p(k);
    else
        r = bracket_f2_f3p(k - 1, l + 1) - (f(2, k - 1) * f3p(l) + f(2, l) * f3p(k - 1));
    r = straighten(r);
    f2f3p_[key] = r;
    return r;
}

NCPoly ModeAlgebra::raw_bracket(const ModeGenerator& a, const ModeGenerator& b) {
    const int k = a.mode, l = b.mode;
    auto X = [&](Family fam, int r, int m) {
        return fam == Family::E ? e(r, m) : fam == Family::F ? f(r, m) : h(r, m);
    };
    auto flipped = [&] { return -bracket(b, a); };

    if (a.family == Family::H && b.family == Family::H) return {};

    if (a.family == b.family && a.root == b.root) {
        // [x_{k+1},x_l] - [x_k,x_{l+1}] = s{x_k,x_l}
        if (k < l) return flipped();
        Rational s = a.family == Family::E ? 1 : -1;
        if (k == l + 1) return X(a.family, a.root, l) * X(a.family, a.root, l) * s;
        return bracket({a.family, a.root, k - 1}, {a.family, a.root, l + 1}) +
               acomm(X(a.family, a.root, k - 1), X(a.family, a.root, l)) * s;
    }

    if (a.family == Family::E && b.family == Family::E) {
        if (a.root > b.root) return flipped();
        if (a.root == 1 && b.root == 2) {
            if (l == 0) return -e(3, k);
            if (l > 0) return bracket(gen_e(1, k + 1), gen_e(2, l - 1)) + acomm(e(1, k), e(2, l - 1)) * kHalf;
            return bracket(gen_e(1, k - 1), gen_e(2, l + 1)) - acomm(e(1, k - 1), e(2, l)) * kHalf;
        }
        if (a.root == 1 && b.root == 3) {
            if (l == 0) return conv(Family::E, 1, 3, k);
            if (l > 0)
                return bracket(gen_e(1, k + 1), gen_e(3, l - 1)) - (e(1, k) * e(3, l - 1) + e(1, l - 1) * e(3, k));
            return bracket(gen_e(1, k - 1), gen_e(3, l + 1)) + e(1, k - 1) * e(3, l) + e(1, l) * e(3, k - 1);
        }
        // e3 = 1/2 sum {e1,e2} - e3'
        return comm(e(2, k), symconv_e12(l)) * kHalf - bracket_e2_e3p(k, l);
    }

    if (a.family == Family::F && b.family == Family::F) {
        if (a.root > b.root) return flipped();
        if (a.root == 1 && b.root == 2) {
            if (l == 0) return f(3, k);
            if (l > 0) return bracket(gen_f(1, k + 1), gen_f(2, l - 1)) - acomm(f(1, k), f(2, l - 1)) * kHalf;
            return bracket(gen_f(1, k - 1), gen_f(2, l + 1)) + acomm(f(1, k - 1), f(2, l)) * kHalf;
        }
        if (a.root == 1 && b.root == 3) {
            if (l == 0) return -conv(Family::F, 1, 3, k);
            if (l > 0)
                return bracket(gen_f(1, k + 1), gen_f(3, l - 1)) + f(1, k) * f(3, l - 1) + f(1, l - 1) * f(3, k);
            return bracket(gen_f(1, k - 1), gen_f(3, l + 1)) - (f(1, k - 1) * f(3, l) + f(1, l) * f(3, k - 1));
        }
        return comm(f(2, k), symconv_f12(l)) * kHalf - bracket_f2_f3p(k, l);
    }

    if (b.family == Family::H) return flipped();

    if (a.family == Family::H) {
        const int i = a.root, j = b.root;
        if (j == 3) {
            if (b.family == Family::E)  // e3_l = -[e1_l, e2_0]
                return -(comm(bracket(a, gen_e(1, l)), e(2, 0)) + comm(e(1, l), bracket(a, gen_e(2, 0))));
            // f3_l = [f1_l, f2_0]
            return comm(bracket(a, gen_f(1, l)), f(2, 0)) + comm(f(1, l), bracket(a, gen_f(2, 0)));
        }
        Rational c = RootData::simple_inner(i, j);
        if (b.family == Family::E) {
            if (k == 0) return e(j, l) * c;
            if (k > 0) return bracket(gen_h(i, k - 1), gen_e(j, l + 1)) + acomm(h(i, k - 1), e(j, l)) * (c * kHalf);
            return bracket(gen_h(i, k + 1), gen_e(j, l - 1)) - acomm(h(i, k), e(j, l - 1)) * (c * kHalf);
        }
        if (k == 0) return f(j, l) * (-c);
        if (k > 0) return bracket(gen_h(i, k - 1), gen_f(j, l + 1)) - acomm(h(i, k - 1), f(j, l)) * (c * kHalf);
        return bracket(gen_h(i, k + 1), gen_f(j, l - 1)) + acomm(h(i, k), f(j, l - 1)) * (c * kHalf);
    }

    if (a.family == Family::F) return flipped();

    // [e_{i,k}, f_{j,l}]
    const int i = a.root, j = b.root;
    if (i == j && i < 3) return h(i, k + l);
    if (i < 3 && j < 3) return {};
    if (i == 1) return bracket(gen_h(1, k + l), gen_f(2, 0));        // j = 3
    if (i == 2) return -bracket(gen_h(2, k), gen_f(1, l));           // j = 3
    if (j == 1) return -bracket(gen_h(1, k + l), gen_e(2, 0));       // i = 3
    if (j == 2) return bracket(gen_h(2, l), gen_e(1, k));            // i = 3
    return h(1, k + l) - comm(bracket(gen_h(1, k + l), gen_e(2, 0)), f(2, 0));
}

NCPoly ModeAlgebra::bracket(const ModeGenerator& a, const ModeGenerator& b) {
    if (a == b) return {};
    if (floor_ && a.mode + b.mode < *floor_) return {};
    check(a.mode);
    check(b.mode);
    auto key = std::make_pair(a, b);
    if (auto it = brackets_.find(key); it != brackets_.end()) return it->second;
    if (auto it = brackets_.find({b, a}); it != brackets_.end()) return -it->second;
    if (!in_progress_.insert(key).second)
        throw std::logic_error("cyclic bracket rule at [" + a.to_string() + ", " + b.to_string() + "]");
    Progress guard{in_progress_, key};
    NCPoly r = straighten(raw_bracket(a, b));
    brackets_[key] = r;
    return r;
}

NCPoly ModeAlgebra::straighten_word(const Word& w) {
    if (floor_ && word_degree(w) < *floor_) return {};
    if (auto it = normal_.find(w); it != normal_.end()) return it->second;
    int pos = -1;
    for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
        if (pbw_before(w[i + 1], w[i], order_)) {
            pos = i;
            if (strategy_ == Strategy::Leftmost) break;
        }
    NCPoly r;
    if (pos < 0) {
        r = NCPoly::word(w);
    } else {
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        r = straighten_word(swapped);
        Word left(w.begin(), w.begin() + pos), right(w.begin() + pos + 2, w.end());
        r += straighten(NCPoly::word(left) * bracket(w[pos], w[pos + 1]) * NCPoly::word(right));
    }
    normal_[w] = r;
    return r;
}

NCPoly ModeAlgebra::straighten(const NCPoly& p) {
    NCPoly r;
    for (const auto& [w, c] : p.terms()) r += straighten_word(w) * c;
    return r;
}

NCPoly mode_bracket(const ModeGenerator& g1, const ModeGenerator& g2, int window) {
    ModeAlgebra alg(window);
    return alg.bracket(g1, g2);
}

NCPoly straighten(const NCPoly& p, int window, Strategy s) {
    ModeAlgebra alg(window, s);
    return alg.straighten(p);
}

NCPoly serre_check(ModeAlgebra& alg, Family fam, int i, int j, int k1, int k2, int l) {
    auto x = [&](int r, int m) { return fam == Family::E ? alg.e(r, m) : alg.f(r, m); };
    NCPoly s = comm(x(i, k1), comm(x(i, k2), x(j, l))) + comm(x(i, k2), comm(x(i, k1), x(j, l)));
    return alg.straighten(s);
}

NCPoly jacobi_check(ModeAlgebra& alg, const ModeGenerator& x, const ModeGenerator& y, const ModeGenerator& z) {
    NCPoly s = comm(NCPoly(x), alg.bracket(y, z)) + comm(NCPoly(y), alg.bracket(z, x)) +
               comm(NCPoly(z), alg.bracket(x, y));
    return alg.straighten(s);
}

std::vector<Word> random_words(int count, int max_len, int max_degree, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Word> out;
    out.reserve(count);
    while (static_cast<int>(out.size()) < count) {
        int len = std::uniform_int_distribution<int>(1, max_len)(rng);
        int budget = max_degree;
        Word w;
        for (int i = 0; i < len; ++i) {
            int fam = std::uniform_int_distribution<int>(0, 2)(rng);
            int root = std::uniform_int_distribution<int>(1, fam == 1 ? 2 : 3)(rng);
            int mode = std::uniform_int_distribution<int>(0, budget)(rng);
            budget -= mode;
            w.push_back({static_cast<Family>(fam), root, mode});
        }
        out.push_back(std::move(w));
    }
    return out;
}

// RepImage

RepImage::RepImage(const TOperator& T) : cur_(currents(T)) {}

const QMatrix& RepImage::generator(const ModeGenerator& g) {
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
    QMatrix m;
    switch (g.family) {
        case Family::E: m = current_mode(cur_.e[g.root - 1], g.mode); break;
        case Family::F: m = current_mode(cur_.f[g.root - 1], g.mode); break;
        case Family::H: m = current_mode(cur_.h[g.root - 1], g.mode, true); break;
    }
    return cache_.emplace(g, std::move(m)).first->second;
}

QMatrix RepImage::operator()(const NCPoly& p) {
    QMatrix r = QMatrix::zero(cur_.dim);
    for (const auto& [w, c] : p.terms()) {
        QMatrix t = QMatrix::identity(cur_.dim);
        for (const auto& g : w) t = t * generator(g);
        r += t * c;
    }
    return r;
}

QMatrix rep_image(const NCPoly& p, const TOperator& T) {
    RepImage img(T);
    return img(p);
}

}  // namespace dy
