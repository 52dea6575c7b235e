#include <benchmark/benchmark.h>

#include "ccrsim/cli/config.hpp"
#include "ccrsim/cli/scenario.hpp"

static void BM_RunScenarioSweep(benchmark::State& state) {
  ccrsim::cli::ScenarioConfig config;
  config.set("sweep", "alpha:0:1.5707963267948966:" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ccrsim::cli::run_scenario(config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunScenarioSweep)->Arg(101)->Arg(10001)->Unit(benchmark::kMillisecond);
