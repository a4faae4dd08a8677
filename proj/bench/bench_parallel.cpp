// Serial reference vs OpenMP kernels. Run with --benchmark_filter to pick a
// kernel; the Exec argument is 0 for serial, 1 for parallel.

#include <benchmark/benchmark.h>

#include "stasheff/gauge.hpp"
#include "stasheff/realization.hpp"
#include "stasheff/steenrod.hpp"
#include "stasheff/verify.hpp"

using namespace stasheff;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void BM_VerifyJ(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_relations(PolytopeKind::J, 5, exec_of(state)));
}

void BM_VerifyK(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_relations(PolytopeKind::K, 6, exec_of(state)));
}

void BM_SphereJ6(benchmark::State& state) {
    const auto poset = FacePoset::build(PolytopeKind::J, 6);
    for (auto _ : state) benchmark::DoNotOptimize(sphere_proxies(poset, exec_of(state)));
}

void BM_FacetSupport(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(facet_support_check(7, exec_of(state)));
}

void BM_Census(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(census(3, 20000, exec_of(state)));
}

void BM_Confluence(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(confluence_probe(5, 1000, 4, 9, 1, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_VerifyJ)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyK)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SphereJ6)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FacetSupport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Census)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Confluence)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
