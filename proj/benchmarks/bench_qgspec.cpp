#include "qgspec/qgspec.hpp"

#include <benchmark/benchmark.h>

using namespace qgspec;

static void BM_EdgeValues(benchmark::State& state) {
    const auto spec = LatticeSpec::kagome(1, 3, 1);
    double k = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(edge_values(k, Side::positive, spec));
        k += 1e-3;
    }
}
BENCHMARK(BM_EdgeValues);

static void BM_SecularDet(benchmark::State& state) {
    const auto spec = LatticeSpec::kagome(1, 3, 1);
    const Quasimomentum q{0.4, -1.2};
    for (auto _ : state) benchmark::DoNotOptimize(secular_det({2.3, 0.0}, q, spec));
}
BENCHMARK(BM_SecularDet);

static void BM_OracleMembership(benchmark::State& state) {
    const auto spec = LatticeSpec::kagome(1, 3, 1);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_in_spectrum(0.3, spec, 64));
}
BENCHMARK(BM_OracleMembership)->Unit(benchmark::kMillisecond);

static void BM_ScanBands(benchmark::State& state) {
    const auto spec = LatticeSpec::kagome(1, 3, 1);
    const double k_max = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(scan_bands(spec, Side::positive, k_max));
}
BENCHMARK(BM_ScanBands)->Arg(40)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_TorusProbability(benchmark::State& state) {
    const auto spec = LatticeSpec::kagome(1, 2.618, 1);
    for (auto _ : state) benchmark::DoNotOptimize(torus_probability(spec, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TorusProbability)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
