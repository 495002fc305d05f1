#include <gtest/gtest.h>

#include <chrono>

#include "dy/errors.hpp"
#include "dy/relations.hpp"

using namespace dy;

namespace {

const RelationSpec& find_spec(const std::string& id) {
    for (const auto& r : relation_catalog())
        if (r.relation_id == id) return r;
    throw std::runtime_error("missing spec " + id);
}

struct Fixture {
    std::vector<Rational> params;
    CurrentSystem sys;
    std::vector<Rational> grid;
};

Fixture single() {
    Fixture f{{Rational(1)}, currents(build_eval_rep(1)), {}};
    f.grid = relation_grid(f.sys, 25, f.params);
    return f;
}

Fixture twofold() {
    Fixture f{{Rational(0), Rational(1)}, currents(tensor_rep(build_eval_rep(0), build_eval_rep(1))), {}};
    f.grid = relation_grid(f.sys, 25, f.params);
    return f;
}

}  // namespace

TEST(Expr, RoundTrip) {
    std::string s = "(add (scale -1/2 (dd (acomm (sub e1@u e1@v) e2@v))) (dd (sub e3@u e3@v)))";
    EXPECT_EQ(to_sexpr(parse_expr(s)), s);
    EXPECT_EQ(to_sexpr(parse_expr("(comm e1#0 e2@u)")), "(comm e1#0 e2@u)");
    EXPECT_THROW(parse_expr("(comm e1@u)"), ParseError);
    EXPECT_THROW(parse_expr("(comm e9@u e1@v)"), ParseError);
    EXPECT_THROW(parse_expr("(frob e1@u e1@v)"), ParseError);
    EXPECT_THROW(parse_expr("(comm e1@u e1@v"), ParseError);
}

TEST(Catalog, SortedUniqueAndComplete) {
    const auto& c = relation_catalog();
    for (size_t i = 1; i < c.size(); ++i) EXPECT_LT(c[i - 1].relation_id, c[i].relation_id);
    // 3+3 same-root, 4 e-f, 4 h-h, 2+2 h-e/h-f, 11 mixed-root relations
    EXPECT_EQ(catalog_group("yangian.").size(), 30u);  // 29 + the e3 reading
    EXPECT_EQ(catalog_group("double.").size(), 29u);
    for (const auto& r : c) {
        std::vector<std::string> names;
        collect_currents(r.lhs, names);
        collect_currents(r.rhs, names);
        EXPECT_FALSE(names.empty()) << r.relation_id;
    }
}

TEST(Catalog, DataFileMatchesBuiltin) {
    auto file = load_catalog(std::string(DY_DATA_DIR) + "/relations.json");
    const auto& c = relation_catalog();
    ASSERT_EQ(file.size(), c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        EXPECT_EQ(file[i].relation_id, c[i].relation_id);
        EXPECT_EQ(to_sexpr(file[i].lhs), to_sexpr(c[i].lhs));
        EXPECT_EQ(to_sexpr(file[i].rhs), to_sexpr(c[i].rhs));
        EXPECT_EQ(file[i].expect_pass, c[i].expect_pass);
    }
    EXPECT_EQ(catalog_to_json(catalog_from_json(catalog_to_json(c))), catalog_to_json(c));
}

TEST(VerifyRelation, HhOnEvaluationRep) {
    auto f = single();
    EXPECT_TRUE(verify_relation(find_spec("yangian.hh.12"), f.sys, f.grid).pass);
}

TEST(VerifyRelation, EfOffDiagonalVanishes) {
    auto f = single();
    EXPECT_TRUE(verify_relation(find_spec("yangian.ef.12"), f.sys, f.grid).pass);
}

TEST(VerifyRelation, E3F3OnTwofold) {
    auto f = twofold();
    EXPECT_TRUE(verify_relation(find_spec("double.e3f3"), f.sys, f.grid).pass);
}

TEST(VerifyRelation, WholeCatalogMatchesExpectations) {
    for (const Fixture& f : {single(), twofold()})
        for (const auto& r : relation_catalog()) {
            auto rep = verify_relation(r, f.sys, f.grid);
            if (r.expect_pass) {
                EXPECT_TRUE(rep.pass) << r.relation_id << " dim " << f.sys.dim;
                EXPECT_EQ(rep.samples_used, 25);
            }
        }
}

TEST(VerifyRelation, DiscrepanciesFailOnTwofold) {
    auto f = twofold();
    for (const char* id : {"yangian.f1f2.e3_reading", "probe.h3h1"}) {
        auto rep = verify_relation(find_spec(id), f.sys, f.grid);
        EXPECT_FALSE(rep.pass) << id;
        ASSERT_TRUE(rep.counterexample.has_value());
        EXPECT_NE(rep.counterexample->lhs, rep.counterexample->rhs);
    }
}

TEST(VerifyRelation, CorruptedSpecFails) {
    auto f = twofold();
    RelationSpec bad = find_spec("yangian.ee.1");
    bad.rhs = parse_expr("(dd (sq (sub e1@u e1@v)))");
    EXPECT_FALSE(verify_relation(bad, f.sys, f.grid).pass);
}

TEST(VerifyRelation, PoleCollision) {
    auto f = single();
    EXPECT_THROW(verify_relation(find_spec("yangian.ee.1"), f.sys, {Rational(1)}), PoleCollision);
}

TEST(VerifyRelation, SerialMatchesParallel) {
    auto f = twofold();
    const auto& r = find_spec("yangian.f1f2.e3_reading");
    auto a = verify_relation(r, f.sys, f.grid, Exec::Serial), b = verify_relation(r, f.sys, f.grid, Exec::Parallel);
    ASSERT_TRUE(a.counterexample && b.counterexample);
    EXPECT_EQ(a.counterexample->point, b.counterexample->point);
    EXPECT_EQ(a.counterexample->lhs, b.counterexample->lhs);
}
