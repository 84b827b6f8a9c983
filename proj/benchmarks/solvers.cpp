#include <benchmark/benchmark.h>

#include <random>

#include "bcs/bcs.hpp"

namespace {

using namespace bcs;

void BM_Interval(benchmark::State& state) {
  const auto m = random_interval_model(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(bcs_interval(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Interval)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond)->Complexity();

void BM_CircularArc(benchmark::State& state) {
  const auto m = random_arc_model(static_cast<int>(state.range(0)), 1, ArcGenOptions{0.2, 0.6, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(bcs_circular_arc(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CircularArc)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Permutation(benchmark::State& state) {
  const auto m = random_permutation_model(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(bcs_permutation(m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Permutation)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond)->Complexity();

// One color-coding table fill; args are (n, k).
void BM_FillTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  std::mt19937_64 rng(7);
  const auto g = random_graph(n, 0.1, rng());
  LabelFunction f;
  for (int v = 0; v < n; ++v) f.label.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(k)));
  for (auto _ : state) benchmark::DoNotOptimize(fill_table(g, f, k));
}
BENCHMARK(BM_FillTable)->ArgsProduct({{20, 40, 60}, {6, 8, 10}})->Unit(benchmark::kMillisecond);

void BM_FillTableBatch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = random_graph(n, 0.2, 3);
  LabelFunction f;
  for (int v = 0; v < n; ++v) f.label.push_back(v % 4);
  for (auto _ : state) benchmark::DoNotOptimize(fill_table(g, f, 4, FillStrategy::Batch));
}
BENCHMARK(BM_FillTableBatch)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(bcs_oracle(g));
}
BENCHMARK(BM_Oracle)->DenseRange(10, 16, 3)->Unit(benchmark::kMillisecond);

}  // namespace

// The packaged benchmark_main archive is built with a different LTO version.
BENCHMARK_MAIN();
