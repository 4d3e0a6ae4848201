#include <benchmark/benchmark.h>

#include "forests/families.hpp"
#include "forests/forest_count.hpp"
#include "forests/invariants.hpp"
#include "forests/potential.hpp"
#include "forests/sampling.hpp"

using namespace forests;

static void BM_TreeCountComplete(benchmark::State& state) {
    Graph g = build({Family::complete, static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(count_spanning_trees(g));
}
BENCHMARK(BM_TreeCountComplete)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_TwoForestCountTorus(benchmark::State& state) {
    Graph g = build({Family::torus, static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(count_two_forests(g));
}
BENCHMARK(BM_TwoForestCountTorus)->Arg(3)->Arg(4)->Arg(5);

static void BM_ResistanceMatrix(benchmark::State& state) {
    Graph g = build({Family::torus, static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(resistance_matrix(g));
}
BENCHMARK(BM_ResistanceMatrix)->Arg(3)->Arg(4)->Arg(5);

static void BM_MainIdentityWheel(benchmark::State& state) {
    Graph g = build({Family::wheel, static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(main_identity(g).all_pass());
}
BENCHMARK(BM_MainIdentityWheel)->Arg(6)->Arg(10)->Arg(14);

static void BM_SampleTreeTorus(benchmark::State& state) {
    Graph g = build({Family::torus, static_cast<int>(state.range(0))});
    Rng rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(sample_spanning_tree(g, rng));
}
BENCHMARK(BM_SampleTreeTorus)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
