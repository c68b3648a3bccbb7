// Serial reference path vs. the OpenMP path for the two trial loops.

#include <benchmark/benchmark.h>

#include "qentropy/experiments.hpp"
#include "qentropy/linalg.hpp"
#include "qentropy/random.hpp"
#include "qentropy/states.hpp"

namespace {

using namespace qentropy;

ExperimentConfig config(std::size_t dim, Execution ex) {
  ExperimentConfig cfg;
  cfg.dim = dim;
  cfg.trials = 64;
  cfg.execution = ex;
  return cfg;
}

void BM_Figure1(benchmark::State& state, Execution ex) {
  const ExperimentConfig cfg = config(static_cast<std::size_t>(state.range(0)), ex);
  for (auto _ : state) benchmark::DoNotOptimize(run_figure1(cfg).summary.min_slack);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.trials));
  state.counters["threads"] = ex == Execution::parallel ? max_threads() : 1;
}

void BM_Theorem1Suite(benchmark::State& state, Execution ex) {
  const ExperimentConfig cfg = config(static_cast<std::size_t>(state.range(0)), ex);
  const std::vector<std::size_t> dims{cfg.dim};
  for (auto _ : state) benchmark::DoNotOptimize(run_property_suite(cfg, Suite::theorem1, dims).total_failures());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.trials));
}

void BM_Eigensystem(benchmark::State& state) {
  Rng rng(1);
  const HermitianMatrix h = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigensystem(h));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Figure1, serial, Execution::serial)->Arg(5)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Figure1, parallel, Execution::parallel)->Arg(5)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Theorem1Suite, serial, Execution::serial)->Arg(8)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Theorem1Suite, parallel, Execution::parallel)->Arg(8)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Eigensystem)->Arg(4)->Arg(8)->Arg(15)->Arg(32);

BENCHMARK_MAIN();
