// Serial reference vs OpenMP suite runner on identical seeded workloads.

#include <benchmark/benchmark.h>

#include "wrol/harness.hpp"

namespace {

wrol::InstanceSpec bench_spec() {
  wrol::InstanceSpec spec;
  spec.size = 4;
  spec.min_size = 1;
  spec.seed = 42;
  return spec;
}

void BM_SuiteSerial(benchmark::State& state) {
  auto spec = bench_spec();
  auto trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wrol::run_suite_serial(wrol::LawId::T23, spec, trials));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SuiteParallel(benchmark::State& state) {
  auto spec = bench_spec();
  auto trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wrol::run_suite(wrol::LawId::T23, spec, trials));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_InclusionSerial(benchmark::State& state) {
  auto spec = bench_spec();
  spec.size = 3;
  auto trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wrol::run_suite_serial(wrol::LawId::T32, spec, trials));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_InclusionParallel(benchmark::State& state) {
  auto spec = bench_spec();
  spec.size = 3;
  auto trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wrol::run_suite(wrol::LawId::T32, spec, trials));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SuiteSerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SuiteParallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_InclusionSerial)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_InclusionParallel)->Arg(20)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
