// Serial reference against the OpenMP variant of each (n, l)-cell kernel.

#include <benchmark/benchmark.h>

#include "jring/analysis.hpp"
#include "jring/symfun.hpp"

namespace {

jring::Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? jring::Execution::serial : jring::Execution::parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel x" + std::to_string(jring::parallel_thread_count()));
}

void BM_ExpansionTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(jring::expansion_table(n, n / 3, mode(state)));
  label(state);
}
BENCHMARK(BM_ExpansionTable)->ArgsProduct({{0, 1}, {16, 20}})->Unit(benchmark::kMillisecond);

void BM_Precompute(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(1));
  for (auto _ : state) {
    jring::TransitionCache cache;
    cache.precompute(n_max, mode(state));
    benchmark::DoNotOptimize(cache.size());
  }
  label(state);
}
BENCHMARK(BM_Precompute)->ArgsProduct({{0, 1}, {14, 18}})->Unit(benchmark::kMillisecond);

void BM_DimensionTable(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(jring::dimension_table(n_max, mode(state)));
  label(state);
}
BENCHMARK(BM_DimensionTable)->ArgsProduct({{0, 1}, {14, 18}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
