// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "kyoung/symmetry.hpp"

namespace {

void BM_BuildSerial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0)), m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kyoung::build_serial(k, m));
}

void BM_BuildParallel(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0)), m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kyoung::build(k, m, {.parallel = true}));
}

void BM_SigmaMapSerial(benchmark::State& state) {
  const auto g = kyoung::build(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kyoung::sigma_map(g, false));
}

void BM_SigmaMapParallel(benchmark::State& state) {
  const auto g = kyoung::build(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(kyoung::sigma_map(g, true));
}

void sizes(benchmark::internal::Benchmark* b) {
  b->Args({3, 6})->Args({4, 4})->Args({5, 4})->Args({6, 4})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_BuildSerial)->Apply(sizes);
BENCHMARK(BM_BuildParallel)->Apply(sizes);
BENCHMARK(BM_SigmaMapSerial)->Apply(sizes);
BENCHMARK(BM_SigmaMapParallel)->Apply(sizes);

BENCHMARK_MAIN();
