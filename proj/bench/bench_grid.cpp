// Serial reference against the OpenMP sample loops.
#include <benchmark/benchmark.h>

#include "dy/coproduct.hpp"
#include "dy/relations.hpp"
#include "dy/rtt.hpp"

using namespace dy;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_CheckRtt(benchmark::State& state) {
    TOperator T = tensor_rep(build_eval_rep(1), build_eval_rep(3));
    Grid g = make_grid(static_cast<int>(state.range(1)), standard_poles({1, 3}));
    for (auto _ : state) benchmark::DoNotOptimize(check_rtt(T, g, exec_of(state)).pass);
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_VerifyRelation(benchmark::State& state) {
    CurrentSystem sys = currents(tensor_rep(build_eval_rep(1), build_eval_rep(3)));
    auto grid = relation_grid(sys, static_cast<int>(state.range(1)), {1, 3});
    const RelationSpec* spec = nullptr;
    for (const auto& r : relation_catalog())
        if (r.relation_id == "yangian.e1e2") spec = &r;
    for (auto _ : state) benchmark::DoNotOptimize(verify_relation(*spec, sys, grid, exec_of(state)).pass);
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_VerifyCoproduct(benchmark::State& state) {
    TOperator a = build_eval_rep(1), b = build_eval_rep(3);
    auto grid = coproduct_grid("e1", a, b, static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_coproduct("e1", a, b, grid, exec_of(state)).pass);
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

}  // namespace

// range(0): 0 serial, 1 parallel; range(1): samples
BENCHMARK(BM_CheckRtt)->ArgsProduct({{0, 1}, {25, 100}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyRelation)->ArgsProduct({{0, 1}, {25, 100}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyCoproduct)->ArgsProduct({{0, 1}, {25, 100}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
