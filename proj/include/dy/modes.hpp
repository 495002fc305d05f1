#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dy/gauss.hpp"

namespace dy {

enum class Family { E, H, F };

// e_{root,mode}, f_{root,mode} for root 1..3, h_{root,mode} for root 1..2.
struct ModeGenerator {
    Family family = Family::E;
    int root = 1;
    int mode = 0;

    // PBW rank: E(1<3<2) < H(1<2) < F(2<3<1), then ascending mode.
    int block() const { return static_cast<int>(family); }
    int root_rank() const;
    int degree() const { return mode; }
    std::string to_string() const;

    friend bool operator==(const ModeGenerator& a, const ModeGenerator& b) {
        return a.family == b.family && a.root == b.root && a.mode == b.mode;
    }
    friend bool operator<(const ModeGenerator& a, const ModeGenerator& b);
};

ModeGenerator gen_e(int root, int mode);
ModeGenerator gen_f(int root, int mode);
ModeGenerator gen_h(int root, int mode);  // throws ConfigError for root 3

using Word = std::vector<ModeGenerator>;

std::string word_to_string(const Word& w);
int word_degree(const Word& w);
bool word_is_sorted(const Word& w);

class NCPoly {
public:
    NCPoly() = default;
    NCPoly(const Rational& c);  // NOLINT: scalar
    NCPoly(const ModeGenerator& g);  // NOLINT
    static NCPoly word(Word w, const Rational& c = 1);

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    void add(const Word& w, const Rational& c);

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend NCPoly operator*(NCPoly a, const Rational& c);
    friend NCPoly operator*(const Rational& c, NCPoly a) { return std::move(a) * c; }
    NCPoly operator-() const { return *this * Rational(-1); }
    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

    // One term per line: "coefficient word", words in PBW word order.
    std::string dump() const;

private:
    std::map<Word, Rational> terms_;
};

NCPoly comm(const NCPoly& a, const NCPoly& b);
NCPoly acomm(const NCPoly& a, const NCPoly& b);

enum class Strategy { Leftmost, Rightmost };

// Plus: E < H < F (Y+ normal form). Minus: F < H < E (Y- normal form), with any
// modes >= 0 moved right of all negative ones. Root and mode order inside a
// block are the same for both.
enum class Order { Plus, Minus };
bool pbw_before(const ModeGenerator& a, const ModeGenerator& b, Order o);

// Windowed algebra: all modes in [-K, K]. Memos are per instance, so two
// instances with different strategies straighten independently. With a floor,
// words of total degree below it are dropped (quotient by the filtration).
class ModeAlgebra {
public:
    explicit ModeAlgebra(int window = 4, Strategy s = Strategy::Leftmost, Order o = Order::Plus,
                         std::optional<int> floor = std::nullopt)
        : K_(window), strategy_(s), order_(o), floor_(floor) {}
    int window() const { return K_; }
    Strategy strategy() const { return strategy_; }
    Order order() const { return order_; }
    std::optional<int> floor() const { return floor_; }

    // Checked generator constructors; throw WindowExhausted outside [-K, K].
    NCPoly e(int root, int mode) const;
    NCPoly f(int root, int mode) const;
    NCPoly h(int root, int mode) const;
    // h_{3,m} as an abbreviation in h1, h2, e2, f2 modes.
    NCPoly h3(int mode) const;
    // e'_{3,m} = 1/2 sum {e1_a, e2_b} - e3_m, likewise f'_3.
    NCPoly e3p(int mode) const;
    NCPoly f3p(int mode) const;

    // Straightened [g1, g2].
    NCPoly bracket(const ModeGenerator& g1, const ModeGenerator& g2);
    NCPoly straighten(const NCPoly& p);
    NCPoly straighten_word(const Word& w);
    NCPoly commutator(const NCPoly& a, const NCPoly& b) { return straighten(comm(a, b)); }

    size_t memo_size() const { return normal_.size() + brackets_.size(); }

private:
    void check(int mode) const;
    NCPoly raw_bracket(const ModeGenerator& a, const ModeGenerator& b);
    NCPoly conv(Family fam, int r1, int r2, int m) const;
    NCPoly symconv_e12(int m) const;
    NCPoly symconv_f12(int m) const;
    NCPoly bracket_e2_e3p(int k, int l);
    NCPoly bracket_f2_f3p(int k, int l);

    int K_;
    Strategy strategy_;
    Order order_;
    std::optional<int> floor_;
    std::map<Word, NCPoly> normal_;
    std::map<std::pair<ModeGenerator, ModeGenerator>, NCPoly> brackets_;
    std::map<std::pair<int, int>, NCPoly> e2e3p_, f2f3p_;
    std::set<std::pair<ModeGenerator, ModeGenerator>> in_progress_;
};

NCPoly mode_bracket(const ModeGenerator& g1, const ModeGenerator& g2, int window = 4);
NCPoly straighten(const NCPoly& p, int window = 4, Strategy s = Strategy::Leftmost);

// Sym_{k1,k2} [x_{i,k1}, [x_{i,k2}, x_{j,l}]], straightened; x = e or f.
NCPoly serre_check(ModeAlgebra& alg, Family fam, int i, int j, int k1, int k2, int l);

// Jacobi sum [x,[y,z]] + [y,[z,x]] + [z,[x,y]], straightened.
NCPoly jacobi_check(ModeAlgebra& alg, const ModeGenerator& x, const ModeGenerator& y, const ModeGenerator& z);

// Deterministic pseudo-random Y+ words: modes >= 0, total mode <= max_degree.
std::vector<Word> random_words(int count, int max_len, int max_degree, unsigned seed);

// Image of mode polynomials under a representation: modes k >= 0 from the
// expansion at infinity, k < 0 from the expansion at zero.
class RepImage {
public:
    explicit RepImage(const TOperator& T);
    const QMatrix& generator(const ModeGenerator& g);
    QMatrix operator()(const NCPoly& p);
    int dim() const { return cur_.dim; }

private:
    CurrentSystem cur_;
    std::map<ModeGenerator, QMatrix> cache_;
};

QMatrix rep_image(const NCPoly& p, const TOperator& T);

}  // namespace dy
