#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "dy/modes.hpp"

namespace dy {

// Sum of (word ⊗ word) terms.
class Tensor2 {
public:
    using Key = std::pair<Word, Word>;
    Tensor2() = default;
    static Tensor2 pure(const NCPoly& a, const NCPoly& b);

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    void add(const Word& a, const Word& b, const Rational& c);

    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    friend Tensor2 operator*(const Tensor2& a, const Tensor2& b);  // legwise
    friend Tensor2 operator*(Tensor2 a, const Rational& c);
    friend bool operator==(const Tensor2& a, const Tensor2& b) { return a.terms_ == b.terms_; }

    // "coefficient left | right", one term per line
    std::string dump() const;

private:
    std::map<Key, Rational> terms_;
};

// Root-lattice weight in the basis alpha1, alpha2; e positive, f negative.
std::pair<int, int> word_weight(const Word& w);

// Positive modes go to Y+, negative modes to Y-; mixed words are rejected.
enum class Half { Plus, Minus, Unit };
Half word_half(const Word& w);

// Table values: <e_{i,k}, f_{j,-m-1}> = <f_{i,k}, e_{j,-m-1}> = -δij δkm,
// <h_{i,k}, h_{j,-m-1}> = -2b C(k,m) b^{k-m} with b = (αi,αj)/2.
Rational generator_pairing(const ModeGenerator& x, const ModeGenerator& y);
// Same numbers from expanding the kernels 1/(u-v) and (u-v+b)/(u-v-b).
Rational generator_pairing_oracle(const ModeGenerator& x, const ModeGenerator& y);
// Pure h words by the product of kernels (h+ against h- is a bicharacter).
Rational h_block_pairing(const Word& x, const Word& y);

// Coproduct, pairing and inverse antipode on the mode algebras. Y+ is exact.
// Y- is computed modulo words of degree below -depth.
class HopfData {
public:
    explicit HopfData(int window = 4, int depth = 4);
    int window() const { return K_; }
    int depth() const { return D_; }
    ModeAlgebra& plus() { return plus_; }
    ModeAlgebra& minus() { return minus_; }
    ModeAlgebra& algebra(Half h) { return h == Half::Minus ? minus_ : plus_; }

    const Tensor2& coproduct(const ModeGenerator& g);
    Tensor2 coproduct(const Word& w);
    Tensor2 coproduct(const NCPoly& p);
    // Y- words exactly as products of the series terms (no straightening), cut
    // at degree -depth; the legs may contain e_{i,0} from h coproducts.
    Tensor2 coproduct_free(const Word& w);
    // Legs straightened in their half's order.
    Tensor2 normalize(const Tensor2& t, Half left, Half right);

    NCPoly antipode_inv(const ModeGenerator& g);  // Y+ only
    NCPoly antipode_inv(const Word& w);
    NCPoly antipode_inv(const NCPoly& p);

    // <x, y>, x in Y+, y in Y-; <x, y1 y2> = <Δx, y1⊗y2>, <x1 x2, y> = <x2⊗x1, Δy>.
    Rational pair(const Word& x, const Word& y);
    Rational pair(const NCPoly& x, const NCPoly& y);
    Rational pair(const Tensor2& x, const Tensor2& y);  // <a⊗b, c⊗d> = <a,c><b,d>

    // <x, y> with x and y straightened first and the triangular factorization
    // <e h f, f' h' e'> = <e,f'><h,h'><f,e'> applied to each pair of monomials.
    Rational pair_triangular(const NCPoly& x, const NCPoly& y);

    // a b = <a1,b1><S^-1 a3,b3> b2 a2 for a in Y+, b in Y-. Terms are (b2 word, a2 word)
    // with b2 unreduced, so the result maps exactly through a representation;
    // normalize(.., Minus, Plus) gives the straightened form.
    Tensor2 cross_relation(const NCPoly& a, const NCPoly& b);
    QMatrix cross_image(const Tensor2& t, RepImage& img);

    size_t memo_size() const { return pair_memo_.size(); }

private:
    using Series = std::vector<NCPoly>;
    using TSeries = std::vector<Tensor2>;
    // Plus: Y+, straightened. Minus: Y-, straightened modulo degree < -depth.
    // Free: Y-, unreduced words, only cut at degree < -depth.
    enum class Store { Plus = 0, Minus = 1, Free = 2 };
    struct Cache {
        std::map<ModeGenerator, Tensor2> gen;
        std::map<Word, Tensor2> word;
        bool built = false;
    };
    NCPoly minus_part(const Word& w);
    NCPoly reduce(Store s, const NCPoly& p);
    Tensor2 reduce(Store s, const Tensor2& t);
    void build(Store s);
    const Tensor2& cached(Store s, const ModeGenerator& g);
    Tensor2 word_coproduct(Store s, const Word& w);
    Series current(Store s, const std::string& name);
    TSeries tmul(Store s, const TSeries& a, const TSeries& b);
    TSeries tpure(const Series& a, const Series& b);
    Series smul(Store s, const Series& a, const Series& b);
    Series shift1(Store s, const Series& a);
    TSeries nilpotent(Store s, const Series& F1, const Series& F3, const Series& G1, const Series& G3);
    int length(Store s) const { return s == Store::Plus ? K_ + 2 : D_; }

    int K_, D_;
    ModeAlgebra plus_, minus_;
    Cache cache_[3];
    std::map<ModeGenerator, NCPoly> sinv_;
    std::set<ModeGenerator> sinv_busy_;
    std::map<std::pair<Word, Word>, Rational> pair_memo_;
};

// e1_k e2_l for k >= 0 > l written through e3+, e3'- and e2- e1+ terms.
Tensor2 e1e2_cross_closed_form(int k, int l, ModeAlgebra& minus, ModeAlgebra& plus);

// Degree tuple bound: <x, y> = 0 unless deg y >= -(deg x + len x).
bool pairing_support_ok(const Word& x, const Word& y);

}  // namespace dy
