#include <gtest/gtest.h>

#include "dy/errors.hpp"
#include "dy/modes.hpp"

using namespace dy;

namespace {

NCPoly G(const ModeGenerator& g) { return NCPoly(g); }

struct Reps {
    RepImage a{tensor_rep(build_eval_rep(1), build_eval_rep(3))};
    RepImage b{tensor_rep(build_eval_rep(frac(5, 2)), build_eval_rep(7))};
};

}  // namespace

TEST(ModeBracket, Examples) {
    EXPECT_EQ(mode_bracket(gen_e(1, 0), gen_f(1, 0)), G(gen_h(1, 0)));
    EXPECT_EQ(mode_bracket(gen_h(1, 0), gen_e(2, 5), 5), -G(gen_e(2, 5)));
    EXPECT_EQ(mode_bracket(gen_e(1, 2), gen_e(2, 0)), -G(gen_e(3, 2)));
    EXPECT_EQ(mode_bracket(gen_f(1, 2), gen_f(2, 0)), G(gen_f(3, 2)));
}

TEST(ModeBracket, AllPairsMatchRepresentation) {
    Reps R;
    ModeAlgebra alg(4);
    std::vector<ModeGenerator> gens;
    for (int m = 0; m <= 2; ++m) {
        for (int r = 1; r <= 3; ++r) gens.push_back(gen_e(r, m)), gens.push_back(gen_f(r, m));
        for (int r = 1; r <= 2; ++r) gens.push_back(gen_h(r, m));
    }
    for (const auto& x : gens)
        for (const auto& y : gens) {
            NCPoly b = alg.bracket(x, y);
            QMatrix want = commutator(R.a.generator(x), R.a.generator(y));
            ASSERT_EQ(R.a(b), want) << x.to_string() << " " << y.to_string() << "\n" << b.dump();
            ASSERT_EQ(R.b(b), commutator(R.b.generator(x), R.b.generator(y)));
        }
}

TEST(ModeBracket, FullWindowAndNegativeModes) {
    // every pair either reproduces the representation or throws WindowExhausted
    Reps R;
    ModeAlgebra alg(4);
    std::vector<ModeGenerator> gens;
    for (int m = -4; m <= 4; ++m) {
        for (int r = 1; r <= 3; ++r) gens.push_back(gen_e(r, m)), gens.push_back(gen_f(r, m));
        for (int r = 1; r <= 2; ++r) gens.push_back(gen_h(r, m));
    }
    int ok = 0, exhausted = 0, negative_ok = 0;
    for (const auto& x : gens)
        for (const auto& y : gens) {
            NCPoly b;
            try {
                b = alg.bracket(x, y);
            } catch (const WindowExhausted&) {
                ++exhausted;
                continue;
            }
            ++ok;
            if (x.mode < 0 || y.mode < 0) ++negative_ok;
            ASSERT_EQ(R.a(b), commutator(R.a.generator(x), R.a.generator(y))) << x.to_string() << " " << y.to_string();
        }
    std::printf("ok %d exhausted %d negative ok %d\n", ok, exhausted, negative_ok);
}

TEST(Straighten, SingleBracket) {
    NCPoly w = G(gen_f(1, 0)) * G(gen_e(1, 0));
    EXPECT_EQ(straighten(w), G(gen_e(1, 0)) * G(gen_f(1, 0)) - G(gen_h(1, 0)));
}

TEST(Straighten, SortedWordIsFixed) {
    Word w = {gen_e(1, 0), gen_e(3, 1), gen_e(2, 0), gen_h(1, 2), gen_f(2, 0), gen_f(1, 1)};
    ASSERT_TRUE(word_is_sorted(w));
    EXPECT_EQ(straighten(NCPoly::word(w)), NCPoly::word(w));
}

TEST(Straighten, Idempotent) {
    ModeAlgebra alg(4);
    for (const Word& w : random_words(30, 4, 4, 7)) {
        NCPoly s = alg.straighten(NCPoly::word(w));
        EXPECT_EQ(alg.straighten(s), s);
        for (const auto& [v, c] : s.terms()) EXPECT_TRUE(word_is_sorted(v));
    }
}

TEST(Straighten, ConfluenceOnRandomWords) {
    Reps R;
    ModeAlgebra left(4, Strategy::Leftmost), right(4, Strategy::Rightmost);
    for (const Word& w : random_words(200, 4, 4, 20261014)) {
        NCPoly p = NCPoly::word(w);
        NCPoly a = left.straighten(p), b = right.straighten(p);
        ASSERT_EQ(a, b) << word_to_string(w);
        ASSERT_EQ(R.a(a), R.a(p)) << word_to_string(w);
        ASSERT_EQ(R.b(a), R.b(p)) << word_to_string(w);
    }
}

TEST(Straighten, WindowExhausted) {
    ModeAlgebra alg(2);
    EXPECT_THROW(alg.straighten(G(gen_h(1, 2)) * G(gen_e(1, 1))), WindowExhausted);
    EXPECT_THROW(alg.e(1, 3), WindowExhausted);
    // h_{-1} e_{0} needs e modes below any finite window
    ModeAlgebra big(4);
    EXPECT_THROW(big.bracket(gen_h(1, -1), gen_e(1, 0)), WindowExhausted);
}

TEST(Serre, VanishesForModesZeroOne) {
    ModeAlgebra alg(4);
    for (Family fam : {Family::E, Family::F})
        for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}})
            for (int k1 = 0; k1 < 2; ++k1)
                for (int k2 = 0; k2 < 2; ++k2)
                    for (int l = 0; l < 2; ++l)
                        EXPECT_TRUE(serre_check(alg, fam, i, j, k1, k2, l).is_zero())
                            << i << j << " " << k1 << k2 << l;
}

TEST(Serre, UnsymmetrizedDoesNotVanish) {
    // a single nested bracket with k1 != k2 is not zero on its own
    ModeAlgebra alg(4);
    NCPoly s = alg.straighten(comm(alg.e(1, 0), comm(alg.e(1, 1), alg.e(2, 0))));
    EXPECT_FALSE(s.is_zero());
}

TEST(Jacobi, DeterministicTriples) {
    ModeAlgebra alg(4);
    // triples drawn as length-3 words so the total mode stays within the window
    std::vector<Word> triples;
    for (const Word& w : random_words(400, 3, 4, 99))
        if (w.size() == 3 && triples.size() < 50) triples.push_back(w);
    ASSERT_EQ(triples.size(), 50u);
    for (const Word& t : triples) {
        const auto &x = t[0], &y = t[1], &z = t[2];
        EXPECT_TRUE(jacobi_check(alg, x, y, z).is_zero()) << x.to_string() << y.to_string() << z.to_string();
        EXPECT_EQ(alg.bracket(x, y), -alg.bracket(y, x));
    }
}

TEST(H3, AbbreviationMatchesRepresentation) {
    Reps R;
    ModeAlgebra alg(4);
    auto rep = tensor_rep(build_eval_rep(1), build_eval_rep(3));
    CurrentSystem c = currents(rep);
    for (int m = -3; m <= 3; ++m) EXPECT_EQ(R.a(alg.h3(m)), current_mode(c.h[2], m, true)) << m;
}

TEST(H3, E3F3BracketIsH3) {
    ModeAlgebra alg(4);
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; k + l <= 2; ++l)
            EXPECT_EQ(alg.bracket(gen_e(3, k), gen_f(3, l)), alg.straighten(alg.h3(k + l)));
}

TEST(RepImage, Basics) {
    TOperator T = build_eval_rep(2);
    // h_{1,0} is the residue of h1(u) - 1
    QMatrix H(3, 3);
    H(0, 0) = -1;
    H(1, 1) = 1;
    EXPECT_EQ(rep_image(G(gen_h(1, 0)), T), H);
    NCPoly rel = comm(G(gen_e(1, 0)), G(gen_f(1, 0))) - G(gen_h(1, 0));
    EXPECT_TRUE(rep_image(rel, T).is_zero());
    EXPECT_THROW(rep_image(G(gen_e(1, -1)), build_eval_rep(0)), PoleAtExpansionPoint);
}

TEST(Dump, OneTermPerLine) {
    NCPoly p = G(gen_e(1, 0)) * G(gen_f(1, 0)) * frac(3, 2) - G(gen_h(1, 0));
    EXPECT_EQ(p.dump(), "3/2 e1(0) f1(0)\n-1 h1(0)\n");
}
