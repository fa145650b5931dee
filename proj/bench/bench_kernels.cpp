// Serial reference vs OpenMP kernels on all invertible trees of a given
// order. Arg 0 is the vertex count; arg 1 the thread count (parallel only).

#include <benchmark/benchmark.h>

#include <map>

#include "invtree/enumeration.hpp"
#include "invtree/sweep.hpp"

using namespace invtree;

namespace {

const std::vector<Tree>& trees(int vertices) {
  static std::map<int, std::vector<Tree>> cache;
  auto& out = cache[vertices];
  if (out.empty()) {
    for (const auto& [_, t] : enumerate_invertible(vertices, 14)) out.push_back(t);
  }
  return out;
}

void BM_MediansSerial(benchmark::State& state) {
  const auto& batch = trees(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(medians_serial(batch));
  state.SetItemsProcessed(state.iterations() * batch.size());
}

void BM_MediansParallel(benchmark::State& state) {
  const auto& batch = trees(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(medians_parallel(batch, state.range(1)));
  state.SetItemsProcessed(state.iterations() * batch.size());
}

void BM_TargetsSerial(benchmark::State& state) {
  const auto& batch = trees(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(one_step_targets_serial(batch));
  state.SetItemsProcessed(state.iterations() * batch.size());
}

void BM_TargetsParallel(benchmark::State& state) {
  const auto& batch = trees(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(one_step_targets_parallel(batch, state.range(1)));
  state.SetItemsProcessed(state.iterations() * batch.size());
}

void BM_SweepSerial(benchmark::State& state) {
  const auto& batch = trees(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exchange_sweep_serial(batch));
  state.SetItemsProcessed(state.iterations() * batch.size());
}

void BM_SweepParallel(benchmark::State& state) {
  const auto& batch = trees(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exchange_sweep_parallel(batch, state.range(1)));
  state.SetItemsProcessed(state.iterations() * batch.size());
}

}  // namespace

BENCHMARK(BM_MediansSerial)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MediansParallel)->ArgsProduct({{12, 14}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TargetsSerial)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TargetsParallel)->ArgsProduct({{12, 14}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSerial)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->ArgsProduct({{12}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
