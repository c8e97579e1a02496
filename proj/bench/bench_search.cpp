// Serial reference vs OpenMP scans.

#include <benchmark/benchmark.h>

#include "omalous/search.hpp"

namespace {

void BM_HypersurfaceSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(omalous::hypersurface_scan_serial(static_cast<int>(state.range(0))));
}

void BM_HypersurfaceParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(omalous::hypersurface_scan(static_cast<int>(state.range(0))));
}

void BM_ProductSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(omalous::product_solutions_serial(n, n, 2 * n + 2));
}

void BM_ProductParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(omalous::product_solutions(n, n, 2 * n + 2));
}

}  // namespace

BENCHMARK(BM_HypersurfaceSerial)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HypersurfaceParallel)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProductParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
