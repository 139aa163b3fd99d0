// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "ksat/sim/batch.hpp"
#include "ksat/sim/fuzz.hpp"
#include "ksat/trust/inconsistency.hpp"
#include "ksat/trust/reference.hpp"

namespace {

using namespace ksat;

trust::TrustModel bench_model(std::int64_t n) {
  return trust::TrustModel::uniform(static_cast<std::size_t>(n), static_cast<std::size_t>(n) / 2 + 1, 2);
}

void BM_InconsistencyParallel(benchmark::State& state) {
  const auto model = bench_model(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trust::analyze_inconsistency(model, {50'000'000, true}).lambda);
}

void BM_InconsistencySearchSerial(benchmark::State& state) {
  const auto model = bench_model(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trust::analyze_inconsistency(model, {50'000'000, false}).lambda);
}

void BM_InconsistencyReference(benchmark::State& state) {
  const auto model = bench_model(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trust::reference::inconsistency_number_serial(model));
}

std::vector<sim::Scenario> bench_scenarios(std::size_t count) {
  sim::Rng rng(11);
  std::vector<sim::Scenario> out;
  while (out.size() < count) {
    const auto model = sim::random_model(rng);
    out.push_back(sim::random_scenario(model, rng));
  }
  return out;
}

void BM_BatchParallel(benchmark::State& state) {
  const auto scenarios = bench_scenarios(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sim::run_batch(scenarios).size());
}

void BM_BatchSerial(benchmark::State& state) {
  const auto scenarios = bench_scenarios(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sim::run_batch_serial(scenarios).size());
}

}  // namespace

BENCHMARK(BM_InconsistencyParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InconsistencySearchSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InconsistencyReference)->DenseRange(5, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchSerial)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
