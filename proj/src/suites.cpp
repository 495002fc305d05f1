#include "dy/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "dy/coproduct.hpp"
#include "dy/errors.hpp"
#include "dy/hopf.hpp"
#include "dy/rmatrix.hpp"

namespace dy {

namespace {

using Check = std::function<VerificationReport()>;

struct Sink {
    std::string suite;
    std::vector<CheckRecord> out;

    void add(const std::string& id, const std::string& anchor, const Check& fn, bool expect = true,
             const std::string& note = "") {
        CheckRecord r;
        r.relation_id = id;
        r.anchor = anchor;
        r.suite = suite;
        r.expect_pass = expect;
        r.note = note;
        try {
            VerificationReport v = fn();
            r.pass = v.pass;
            r.samples = v.samples_used;
            r.counterexample = v.counterexample;
            if (!v.note.empty()) r.note = r.note.empty() ? v.note : r.note + "; " + v.note;
        } catch (const std::exception& e) {
            r.pass = false;
            r.note = r.note.empty() ? e.what() : r.note + "; " + e.what();
        }
        out.push_back(std::move(r));
    }
};

std::string tag(const std::vector<Rational>& ps) {
    std::string s = "[";
    for (size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + ps[i].get_str();
    return s + "]";
}

VerificationReport fail_at(VerificationReport r, const std::string& point, const std::string& lhs,
                           const std::string& rhs) {
    r.pass = false;
    if (!r.counterexample) r.counterexample = Counterexample{point, lhs, rhs};
    return r;
}

std::vector<ModeGenerator> gens(int mode) {
    std::vector<ModeGenerator> v;
    for (int r = 1; r <= 3; ++r) v.push_back(gen_e(r, mode));
    for (int r = 1; r <= 2; ++r) v.push_back(gen_h(r, mode));
    for (int r = 1; r <= 3; ++r) v.push_back(gen_f(r, mode));
    return v;
}

const std::vector<RelationSpec>& catalog_of(const SuiteInputs& in) {
    return in.catalog.empty() ? relation_catalog() : in.catalog;
}

bool is_double(const RelationSpec& s) { return s.relation_id.rfind("double.", 0) == 0; }

void catalog_records(Sink& sink, const SuiteInputs& in, bool want_double) {
    const Rational &a = in.params[0], &b = in.params[1];
    CurrentSystem sys = currents(tensor_rep(build_eval_rep(a), build_eval_rep(b)));
    std::vector<Rational> grid = relation_grid(sys, in.samples, {a, b});
    for (const auto& spec : catalog_of(in)) {
        if (is_double(spec) != want_double) continue;
        sink.add(spec.relation_id, spec.anchor, [&] { return verify_relation(spec, sys, grid); }, spec.expect_pass,
                 spec.note);
    }
}

// ---------------------------------------------------------------- suites

void rtt_suite(Sink& s, const SuiteInputs& in) {
    const char* anchor = "R(u-v) T1(u) T2(v) = T2(v) T1(u) R(u-v), all 81 (i,j,k,l)";
    for (const auto& p : in.params)
        s.add("rtt.eval" + tag({p}), anchor, [&] { return check_rtt(build_eval_rep(p), make_grid(in.samples, standard_poles({p}))); });
    std::vector<Rational> ab = {in.params[0], in.params[1]};
    s.add("rtt.tensor" + tag(ab), anchor, [&] {
        return check_rtt(tensor_rep(build_eval_rep(ab[0]), build_eval_rep(ab[1])), make_grid(in.samples, standard_poles(ab)));
    });
}

void gauss_suite(Sink& s, const SuiteInputs& in) {
    const Rational &a = in.params[0], &b = in.params[1];
    auto ratio = [](const Rational& n, const Rational& d) {
        return RationalFunction(Polynomial::linear_root(n), Polynomial::linear_root(d));
    };
    const std::vector<std::pair<std::string, RationalFunction>> twists = {{"(u+2)/(u+1)", ratio(-2, -1)},
                                                                           {"(u-5)/(u-4)", ratio(5, 4)}};
    std::vector<std::pair<std::string, TOperator>> reps = {{"eval" + tag({a}), build_eval_rep(a)},
                                                           {"tensor" + tag({a, b}), tensor_rep(build_eval_rep(a), build_eval_rep(b))},
                                                           {"trivial", trivial_rep()}};
    for (const auto& [name, T] : reps) {
        s.add("gauss.recompose." + name, "L K U = T", [&] {
            VerificationReport r;
            r.relation_id = "gauss.recompose";
            r.samples_used = 1;
            TOperator R = recompose(gauss_decompose(T));
            for (int k = 0; k < 9; ++k)
                if (!(R.t[k] == T.t[k]))
                    return fail_at(r, "t" + std::to_string(k / 3 + 1) + std::to_string(k % 3 + 1), R.t[k].eval(0).dump(),
                                   T.t[k].eval(0).dump());
            return r;
        });
        s.add("gauss.cw_match." + name, "Cartan-Weyl currents from the Gauss factors", [&] { return verify_gauss_cw_match(T); });
        for (size_t i = 0; i < twists.size(); ++i)
            s.add("gauss.twist" + std::to_string(i + 1) + "." + name, "currents of c(u) T(u), c = " + twists[i].first,
                  [&] { return scalar_twist_invariance(T, twists[i].second); });
    }
}

void relations_suite(Sink& s, const SuiteInputs& in) { catalog_records(s, in, false); }

void coproduct_suite(Sink& s, const SuiteInputs& in) {
    TOperator A = build_eval_rep(in.params[0]), B = build_eval_rep(in.params[1]);
    std::string t = tag({in.params[0], in.params[1]});
    for (const auto& id : coproduct_formula_ids())
        s.add("coproduct." + id + t, "current coproduct of " + id + " on Va ⊗ Vb",
              [&] { return verify_coproduct(id, A, B, coproduct_grid(id, A, B, in.samples)); });
    for (const auto& id : low_mode_ids())
        s.add("coproduct.low." + id + t, "mode " + id + " of the coproduct series", [&] { return verify_low_mode(id, A, B); });
}

void double_suite(Sink& s, const SuiteInputs& in) {
    catalog_records(s, in, true);
    const Rational &a = in.params[0], &b = in.params[1];
    std::unique_ptr<HopfData> H;
    std::unique_ptr<RepImage> img;
    auto setup = [&] {
        if (!H) H = std::make_unique<HopfData>(in.mode_window, in.mode_window);
        if (!img) img = std::make_unique<RepImage>(tensor_rep(build_eval_rep(a), build_eval_rep(b)));
    };
    auto T = [](const Word& x, const Word& y) {
        Tensor2 t;
        t.add(x, y, 1);
        return t;
    };
    auto base = [](const std::string& id, int n) {
        VerificationReport r;
        r.relation_id = id;
        r.samples_used = n;
        return r;
    };
    std::string t = tag({a, b});
    for (int k = 0; k <= 2; ++k)
        for (int l = -1; l >= -2; --l) {
            std::string kl = "[" + std::to_string(k) + "," + std::to_string(l) + "]";
            s.add("double.cross.e1e2" + kl, "e1(k) e2(l) from the pairing against the kernel 1/(u-v+1/2); rep " + t, [&] {
                setup();
                VerificationReport r = base("double.cross.e1e2", 3);
                Tensor2 cr = H->cross_relation(NCPoly(gen_e(1, k)), NCPoly(gen_e(2, l)));
                Tensor2 cf = e1e2_cross_closed_form(k, l, H->minus(), H->plus());
                Tensor2 n1 = H->normalize(cr, Half::Minus, Half::Plus), n2 = H->normalize(cf, Half::Minus, Half::Plus);
                if (!(n1 == n2)) return fail_at(r, "normal form", n1.dump(), n2.dump());
                QMatrix prod = img->generator(gen_e(1, k)) * img->generator(gen_e(2, l));
                QMatrix c1 = H->cross_image(cr, *img), c2 = H->cross_image(cf, *img);
                if (c1 != prod) return fail_at(r, "rep image", c1.dump(), prod.dump());
                if (c2 != prod) return fail_at(r, "closed form rep image", c2.dump(), prod.dump());
                return r;
            });
            s.add("double.cross.ef" + kl, "e_k f_l = f_l e_k + h_{k+l}; rep " + t, [&] {
                setup();
                VerificationReport r = base("double.cross.ef", 5);
                for (int i = 1; i <= 2; ++i) {
                    Tensor2 cr = H->cross_relation(NCPoly(gen_e(i, k)), NCPoly(gen_f(i, l)));
                    Tensor2 want = T({gen_f(i, l)}, {gen_e(i, k)});
                    want += k + l >= 0 ? T({}, {gen_h(i, k + l)}) : T({gen_h(i, k + l)}, {});
                    Tensor2 got = H->normalize(cr, Half::Minus, Half::Plus);
                    if (!(got == want)) return fail_at(r, "root " + std::to_string(i), got.dump(), want.dump());
                    QMatrix c = H->cross_image(cr, *img), p = img->generator(gen_e(i, k)) * img->generator(gen_f(i, l));
                    if (c != p) return fail_at(r, "rep image root " + std::to_string(i), c.dump(), p.dump());
                    Tensor2 other = H->normalize(H->cross_relation(NCPoly(gen_e(i, k)), NCPoly(gen_f(3 - i, l))),
                                                 Half::Minus, Half::Plus);
                    Tensor2 want_other = T({gen_f(3 - i, l)}, {gen_e(i, k)});
                    if (!(other == want_other)) return fail_at(r, "roots " + std::to_string(i) + "," + std::to_string(3 - i),
                                                               other.dump(), want_other.dump());
                }
                Tensor2 c3 = H->cross_relation(NCPoly(gen_e(3, k)), NCPoly(gen_f(3, l)));
                QMatrix c = H->cross_image(c3, *img), p = img->generator(gen_e(3, k)) * img->generator(gen_f(3, l));
                if (c != p) return fail_at(r, "rep image e3 f3", c.dump(), p.dump());
                return r;
            });
            s.add("double.cross.hh" + kl, "h+(k) h-(l) commute; rep " + t, [&] {
                setup();
                VerificationReport r = base("double.cross.hh", 4);
                for (int i = 1; i <= 2; ++i)
                    for (int j = 1; j <= 2; ++j) {
                        Tensor2 cr = H->cross_relation(NCPoly(gen_h(i, k)), NCPoly(gen_h(j, l)));
                        Tensor2 got = H->normalize(cr, Half::Minus, Half::Plus), want = T({gen_h(j, l)}, {gen_h(i, k)});
                        std::string pt = "h" + std::to_string(i) + " h" + std::to_string(j);
                        if (!(got == want)) return fail_at(r, pt, got.dump(), want.dump());
                        QMatrix c = H->cross_image(cr, *img), p = img->generator(gen_h(i, k)) * img->generator(gen_h(j, l));
                        if (c != p) return fail_at(r, pt + " rep image", c.dump(), p.dump());
                    }
                return r;
            });
        }
}

void pairing_suite(Sink& s, const SuiteInputs& in) {
    const int K = in.mode_window;
    std::unique_ptr<HopfData> Hp;
    auto H = [&]() -> HopfData& {
        if (!Hp) Hp = std::make_unique<HopfData>(K, K);
        return *Hp;
    };
    auto base = [](const std::string& id) {
        VerificationReport r;
        r.relation_id = id;
        return r;
    };
    s.add("pairing.table", "generator pairing against the kernel expansions, |mode| <= window", [&] {
        VerificationReport r = base("pairing.table");
        for (int k = 0; k <= K; ++k)
            for (int l = -1; l >= -K; --l)
                for (const auto& x : gens(k))
                    for (const auto& y : gens(l)) {
                        ++r.samples_used;
                        Rational t = generator_pairing(x, y), o = generator_pairing_oracle(x, y);
                        if (t != o) return fail_at(r, x.to_string() + " ; " + y.to_string(), t.get_str(), o.get_str());
                    }
        return r;
    });
    s.add("pairing.compat", "<x, y1 y2> = <Δx, y1 ⊗ y2>, |k|+|l1|+|l2| <= 3", [&] {
        VerificationReport r = base("pairing.compat");
        for (int k = 0; k <= 1; ++k)
            for (int l1 = -1; l1 >= -3; --l1)
                for (int l2 = -1; l2 >= -3; --l2) {
                    if (k - l1 - l2 > 3) continue;
                    for (const auto& x : gens(k))
                        for (const auto& y1 : gens(l1))
                            for (const auto& y2 : gens(l2)) {
                                ++r.samples_used;
                                Rational a = H().pair_triangular(NCPoly(x), NCPoly::word({y1, y2}));
                                Rational b = H().pair(H().coproduct(x), Tensor2::pure(NCPoly(y1), NCPoly(y2)));
                                if (a != b)
                                    return fail_at(r, x.to_string() + " ; " + y1.to_string() + " " + y2.to_string(),
                                                   a.get_str(), b.get_str());
                            }
                }
        return r;
    });
    s.add("pairing.compat_mirror", "<x1 x2, y> = <x2 ⊗ x1, Δy>, |k1|+|k2|+|l| <= 3", [&] {
        VerificationReport r = base("pairing.compat_mirror");
        for (int k1 = 0; k1 <= 1; ++k1)
            for (int k2 = 0; k2 <= 1; ++k2)
                for (int l = -1; l >= -3; --l) {
                    if (k1 + k2 - l > 3) continue;
                    for (const auto& x1 : gens(k1))
                        for (const auto& x2 : gens(k2))
                            for (const auto& y : gens(l)) {
                                ++r.samples_used;
                                Rational a = H().pair_triangular(NCPoly::word({x1, x2}), NCPoly(y));
                                Rational b = H().pair(Tensor2::pure(NCPoly(x2), NCPoly(x1)), H().coproduct(y));
                                if (a != b)
                                    return fail_at(r, x1.to_string() + " " + x2.to_string() + " ; " + y.to_string(),
                                                   a.get_str(), b.get_str());
                            }
                }
        return r;
    });
    s.add("pairing.support", "<x, y> = 0 unless -deg y <= deg x + len x", [&] {
        VerificationReport r = base("pairing.support");
        std::vector<Word> xs, ys;
        for (int k = 0; k <= 2; ++k)
            for (const auto& g : gens(k)) xs.push_back({g});
        for (int k1 = 0; k1 <= 1; ++k1)
            for (int k2 = 0; k2 <= 1; ++k2)
                for (const auto& a : gens(k1))
                    for (const auto& b : gens(k2)) xs.push_back({a, b});
        for (int l = -1; l >= -4; --l)
            for (const auto& g : gens(l)) ys.push_back({g});
        for (int l1 = -1; l1 >= -3; --l1)
            for (int l2 = -1; l1 + l2 >= -4; --l2)
                for (const auto& a : gens(l1))
                    for (const auto& b : gens(l2)) ys.push_back({a, b});
        for (const auto& x : xs)
            for (const auto& y : ys) {
                ++r.samples_used;
                Rational p = H().pair(x, y);
                if (p != 0 && !pairing_support_ok(x, y))
                    return fail_at(r, word_to_string(x) + " ; " + word_to_string(y), p.get_str(), "0");
            }
        return r;
    });
    s.add("pairing.antipode", "m (S^-1 ⊗ 1) Δ^op = m (1 ⊗ S^-1) Δ^op = 0 on generators, mode <= 2", [&] {
        VerificationReport r = base("pairing.antipode");
        for (int k = 0; k <= 2; ++k)
            for (const auto& g : gens(k)) {
                ++r.samples_used;
                NCPoly a, b;
                for (const auto& [w, c] : H().coproduct(g).terms()) {
                    a += H().antipode_inv(w.second) * NCPoly::word(w.first) * c;
                    b += NCPoly::word(w.second) * H().antipode_inv(w.first) * c;
                }
                NCPoly sa = H().plus().straighten(a), sb = H().plus().straighten(b);
                if (!sa.is_zero()) return fail_at(r, g.to_string() + " left", sa.dump(), "0");
                if (!sb.is_zero()) return fail_at(r, g.to_string() + " right", sb.dump(), "0");
            }
        return r;
    });
}

void serre_suite(Sink& s, const SuiteInputs& in) {
    const int K = in.mode_window;
    const Rational &a = in.params[0], &b = in.params[1];
    for (Family fam : {Family::E, Family::F}) {
        std::string x = fam == Family::E ? "e" : "f";
        s.add("serre.modes." + x, "Sym [" + x + "_i(k1), [" + x + "_i(k2), " + x + "_j(l)]] = 0, modes in {0,1}", [&, fam] {
            VerificationReport r;
            ModeAlgebra alg(K);
            for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}})
                for (int k1 = 0; k1 < 2; ++k1)
                    for (int k2 = 0; k2 < 2; ++k2)
                        for (int l = 0; l < 2; ++l) {
                            ++r.samples_used;
                            NCPoly v = serre_check(alg, fam, i, j, k1, k2, l);
                            if (!v.is_zero())
                                return fail_at(r,
                                               "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ") modes " +
                                                   std::to_string(k1) + std::to_string(k2) + std::to_string(l),
                                               v.dump(), "0");
                        }
            return r;
        });
    }
    s.add("serre.rep.eval" + tag({a}), "Serre relations of the currents", [&] { return serre_in_rep(build_eval_rep(a)); });
    s.add("serre.rep.tensor" + tag({a, b}), "Serre relations of the currents",
          [&] { return serre_in_rep(tensor_rep(build_eval_rep(a), build_eval_rep(b))); });
    s.add("symbolic.confluence", "leftmost and rightmost straightening agree and match the rep image, 200 words", [&] {
        VerificationReport r;
        RepImage ra(tensor_rep(build_eval_rep(a), build_eval_rep(b))), rb(tensor_rep(build_eval_rep(b), build_eval_rep(a)));
        ModeAlgebra left(K, Strategy::Leftmost), right(K, Strategy::Rightmost);
        for (const Word& w : random_words(200, 4, 4, 20261014)) {
            ++r.samples_used;
            NCPoly p = NCPoly::word(w);
            NCPoly x = left.straighten(p), y = right.straighten(p);
            if (!(x == y)) return fail_at(r, word_to_string(w), x.dump(), y.dump());
            QMatrix m1 = ra(x), m2 = ra(p);
            if (m1 != m2) return fail_at(r, word_to_string(w) + " in " + tag({a, b}), m1.dump(), m2.dump());
            m1 = rb(x);
            m2 = rb(p);
            if (m1 != m2) return fail_at(r, word_to_string(w) + " in " + tag({b, a}), m1.dump(), m2.dump());
        }
        return r;
    });
    s.add("symbolic.jacobi", "[x,[y,z]] + cyclic = 0 and [x,y] = -[y,x], 50 triples", [&] {
        VerificationReport r;
        ModeAlgebra alg(K);
        std::vector<Word> triples;
        for (const Word& w : random_words(400, 3, 4, 99))
            if (w.size() == 3 && triples.size() < 50) triples.push_back(w);
        for (const Word& t : triples) {
            ++r.samples_used;
            NCPoly j = jacobi_check(alg, t[0], t[1], t[2]);
            if (!j.is_zero()) return fail_at(r, word_to_string(t), j.dump(), "0");
            NCPoly p = alg.bracket(t[0], t[1]), q = -alg.bracket(t[1], t[0]);
            if (!(p == q)) return fail_at(r, word_to_string(t) + " antisymmetry", p.dump(), q.dump());
        }
        return r;
    });
}

std::vector<Rational> intertwiner_grid(const TOperator& A, const TOperator& B, int n) {
    CurrentSystem d = currents(tensor_rep(A, B)), dop = currents(tensor_rep(B, A));
    static const char* names[] = {"e1", "e2", "e3", "f1", "f2", "f3", "h1", "h2", "h3"};
    return sample_values(n, [&](const Rational& u) {
        for (const char* c : names)
            if (d.get(c).has_pole_at(u) || dop.get(c).has_pole_at(u)) return true;
        return false;
    });
}

void rmatrix_suite(Sink& s, const SuiteInputs& in) {
    const Rational &a = in.params[0], &b = in.params[1];
    std::string t = tag({a, b});
    TOperator A = build_eval_rep(a), B = build_eval_rep(b);
    s.add("rmatrix.solve_rh" + t, "RE H RF = 1 + P/(a-b), H diagonal", [&] {
        VerificationReport r;
        r.samples_used = 1;
        RFactor E = assemble_RE(A, B), F = assemble_RF(A, B);
        CartanSolution H = solve_RH(E, F, A, B);
        QMatrix lhs = E.matrix * H.H.matrix * F.matrix, rhs = yang_r(a, b).matrix * H.scalar;
        if (lhs != rhs) return fail_at(r, "residual", lhs.dump(), rhs.dump());
        if (H.nullity != 1) return fail_at(r, "nullity", std::to_string(H.nullity), "1");
        return r;
    });
    s.add("rmatrix.triangular" + t, "RE unipotent upper, RF unipotent lower in the weight basis", [&] {
        VerificationReport r;
        r.samples_used = 1;
        auto order = weight_sorted_basis();
        QMatrix E = in_basis(assemble_RE(A, B).matrix, order), F = in_basis(assemble_RF(A, B).matrix, order);
        if (!is_unipotent_upper(E)) return fail_at(r, "RE", E.dump(), "unipotent upper");
        if (!is_unipotent_lower(F)) return fail_at(r, "RF", F.dump(), "unipotent lower");
        return r;
    });
    s.add("rmatrix.intertwiner" + t, "R Δ(x)(u) = Δop(x)(u) R for all currents",
          [&] { return check_intertwiner(assemble_R(A, B), A, B, intertwiner_grid(A, B, in.samples)); });
    s.add("rmatrix.intertwiner_no_h" + t, "RE RF without the Cartan factor; must fail", [&] {
        return check_intertwiner(assemble_RE(A, B).matrix * assemble_RF(A, B).matrix, A, B,
                                 intertwiner_grid(A, B, in.samples));
    }, false);
    s.add("rmatrix.sign_flip" + t, "exp(+Σ e⊗f) factors admit no Cartan factor; must fail", [&] {
        solve_RH(assemble_RE(A, B, {1, 3, 2}, 1), assemble_RF(A, B, {2, 3, 1}, 1), A, B);
        VerificationReport r;
        r.samples_used = 1;
        return r;
    }, false);
}

void ybe_suite(Sink& s, const SuiteInputs& in) {
    std::vector<std::array<Rational, 3>> triples = {{in.params[0], in.params[1], in.params[2]},
                                                    {frac(1, 2), 2, 5},
                                                    {2, -1, 3},
                                                    {2, -1, 4},
                                                    {-3, frac(1, 3), 4},
                                                    {5, 7, -2},
                                                    {frac(1, 3), frac(-1, 2), 9}};
    const char* anchor = "R12 R13 R23 = R23 R13 R12 on (C^3)^⊗3";
    std::vector<std::string> seen;
    for (const auto& tr : triples) {
        std::string id = "ybe" + tag({tr[0], tr[1], tr[2]});
        if (std::find(seen.begin(), seen.end(), id) != seen.end()) continue;
        seen.push_back(id);
        s.add(id, anchor, [&] { return check_ybe(tr[0], tr[1], tr[2]); });
    }
    const auto& p = in.params;
    s.add("ybe.corrupted" + tag({p[0], p[1], p[2]}), "R with entry (1,3) shifted by 1/5; must fail", [&] {
        return check_ybe([](const Rational& x, const Rational& y) {
            QMatrix R = assemble_R(x, y);
            R(1, 3) += frac(1, 5);
            return R;
        }, p[0], p[1], p[2]);
    }, false);
}

const std::map<std::string, std::pair<int, void (*)(Sink&, const SuiteInputs&)>>& registry() {
    static const std::map<std::string, std::pair<int, void (*)(Sink&, const SuiteInputs&)>> r = {
        {"rtt", {2, rtt_suite}},         {"gauss", {2, gauss_suite}},   {"relations", {2, relations_suite}},
        {"coproduct", {2, coproduct_suite}}, {"double", {2, double_suite}}, {"pairing", {0, pairing_suite}},
        {"serre", {2, serre_suite}},     {"rmatrix", {2, rmatrix_suite}}, {"ybe", {3, ybe_suite}}};
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> n = {"rtt",     "gauss", "relations", "coproduct", "double",
                                               "pairing", "serre", "rmatrix",   "ybe"};
    return n;
}

int params_needed(const std::string& suite) {
    auto it = registry().find(suite);
    if (it == registry().end()) throw ConfigError("unknown suite '" + suite + "'");
    return it->second.first;
}

bool suite_samples(const std::string& suite) {
    return suite == "rtt" || suite == "relations" || suite == "coproduct" || suite == "double" || suite == "rmatrix";
}

std::vector<CheckRecord> run_named_suite(const std::string& name, const SuiteInputs& in) {
    auto it = registry().find(name);
    if (it == registry().end()) throw ConfigError("unknown suite '" + name + "'");
    if (static_cast<int>(in.params.size()) < it->second.first)
        throw ConfigError("suite " + name + " needs " + std::to_string(it->second.first) + " spectral parameters");
    Sink s{name, {}};
    it->second.second(s, in);
    return std::move(s.out);
}

}  // namespace dy
