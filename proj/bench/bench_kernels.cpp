// Serial reference against the OpenMP kernels: building enumeration over
// (x, z) pairs and per-class homology.

#include <benchmark/benchmark.h>

#include "cch/buildings.hpp"
#include "cch/chain_complex.hpp"
#include "cch/models.hpp"

namespace {

using namespace cch;

OrbitSet enumeration_set() { return lens_space(3, height_function()); }

const Budgets kBudgets{4, 6, 4, 4, 6};

void BM_EnumerateSerial(benchmark::State& state) {
    OrbitSet s = enumeration_set();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_buildings_serial(s, 2, 1, kBudgets));
}

void BM_EnumerateParallel(benchmark::State& state) {
    OrbitSet s = enumeration_set();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_buildings(s, 2, 1, kBudgets));
}

GradedMatrixComplex lens_complex(int n, int hi) {
    OrbitSet s = lens_space(n, height_function());
    auto t = build_generators(s, std::nullopt, 0, hi, 100000);
    return differential(s, t, {}, Variant::minus);
}

void BM_HomologySerial(benchmark::State& state) {
    auto cx = lens_complex(static_cast<int>(state.range(0)), 200);
    for (auto _ : state) benchmark::DoNotOptimize(homology_serial(cx));
}

void BM_HomologyParallel(benchmark::State& state) {
    auto cx = lens_complex(static_cast<int>(state.range(0)), 200);
    for (auto _ : state) benchmark::DoNotOptimize(homology(cx));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomologySerial)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HomologyParallel)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
