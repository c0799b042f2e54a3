#include <benchmark/benchmark.h>

#include "intersector/quot.hpp"
#include "intersector/residue.hpp"
#include "intersector/witten.hpp"

using namespace intersector;

static void BM_ViExact(benchmark::State& state) {
    auto p = build_problem(2, 5, 2, static_cast<int>(state.range(0)), AClassPoly::one(2));
    for (auto _ : state) benchmark::DoNotOptimize(vi_evaluate(p));
}
BENCHMARK(BM_ViExact)->Arg(6)->Arg(10)->Arg(14);

static void BM_ViExactRank3(benchmark::State& state) {
    auto p = build_problem(3, 5, 2, 9, AClassPoly::generator(3, 3));
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(vi_evaluate(p, threads));
}
BENCHMARK(BM_ViExactRank3)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ViNumeric(benchmark::State& state) {
    auto p = build_problem(2, 5, 2, 14, AClassPoly::one(2));
    for (auto _ : state) benchmark::DoNotOptimize(vi_evaluate_numeric(p, state.range(0)));
}
BENCHMARK(BM_ViNumeric)->Arg(64)->Arg(256);

static void BM_QuotResidue(benchmark::State& state) {
    auto p = build_problem(2, 5, 2, static_cast<int>(state.range(0)), AClassPoly::one(2));
    for (auto _ : state) benchmark::DoNotOptimize(quot_residue(p));
}
BENCHMARK(BM_QuotResidue)->Arg(6)->Arg(10)->Arg(14);

static void BM_ModuliPairing(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(moduli_pairing(3, 1, g, AClassPoly::generator(3, 2)));
}
BENCHMARK(BM_ModuliPairing)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_VerlindeChi(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verlinde_chi(2, 1, 3, state.range(0)));
}
BENCHMARK(BM_VerlindeChi)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_WittenSum(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(witten_sum(3, 1, 3, AClassPoly::one(3), state.range(0)));
}
BENCHMARK(BM_WittenSum)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
