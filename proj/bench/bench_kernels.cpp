// Compares the OpenMP kernels with their serial references.

#include <benchmark/benchmark.h>

#include "antitop/core.hpp"
#include "antitop/modal.hpp"
#include "antitop/search.hpp"

namespace {

void BM_EnumeratePruned(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(antitop::enumerate_pruned(n));
}
BENCHMARK(BM_EnumeratePruned)->DenseRange(2, 4);

void BM_EnumerateByFiltering(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(antitop::enumerate_by_filtering(n));
}
BENCHMARK(BM_EnumerateByFiltering)->DenseRange(2, 4);

// A valid formula forces a full sweep: 2^(4*4) valuations on four worlds.
const char* kSweepFormula = "[](p & q) & []r & []s -> !(p & q | r & s) | [](p & q) | !(p & q)";

void BM_TautologyParallel(benchmark::State& state) {
  const auto space = antitop::make_example(antitop::KUniform{4, 2});
  const auto f = antitop::modal::parse_formula(kSweepFormula);
  for (auto _ : state) benchmark::DoNotOptimize(antitop::modal::is_tautology_in_space(space, f));
}
BENCHMARK(BM_TautologyParallel);

void BM_TautologySerial(benchmark::State& state) {
  const auto space = antitop::make_example(antitop::KUniform{4, 2});
  const auto f = antitop::modal::parse_formula(kSweepFormula);
  for (auto _ : state) {
    benchmark::DoNotOptimize(antitop::modal::is_tautology_in_space_serial(space, f));
  }
}
BENCHMARK(BM_TautologySerial);

}  // namespace

BENCHMARK_MAIN();
