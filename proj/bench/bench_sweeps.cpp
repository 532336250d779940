#include <benchmark/benchmark.h>
#include <omp.h>

#include "mfib/sweep.hpp"

// Serial reference vs OpenMP sweeps. Thread count is the benchmark argument
// for the parallel variants.

namespace {

constexpr std::uint64_t kSeed = 0xC0FFEE;

void BM_FiberSweepSerial(benchmark::State& state) {
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(mfib::serial::fiber_sweep(mfib::FiberKind::mq5, samples, kSeed, mfib::Orbit::first));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_FiberSweepParallel(benchmark::State& state) {
  const auto samples = static_cast<std::size_t>(state.range(0));
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(mfib::parallel::fiber_sweep(mfib::FiberKind::mq5, samples, kSeed, mfib::Orbit::first));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ClassifyGridSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mfib::serial::classify_grid(5, static_cast<int>(state.range(0))));
}

void BM_ClassifyGridParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(mfib::parallel::classify_grid(5, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_FiberSweepSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FiberSweepParallel)
    ->ArgsProduct({{1000, 10000}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_ClassifyGridSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyGridParallel)->ArgsProduct({{8}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
