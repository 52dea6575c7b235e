#include <benchmark/benchmark.h>

#include "ccrsim/ccr.hpp"
#include "ccrsim/interferometer.hpp"
#include "ccrsim/wigner/newtonian.hpp"

using namespace ccrsim;

static void BM_ClosedFormQcre(benchmark::State& state) {
  const interferometer::BeamSplitterControl bs(0.6);
  for (auto _ : state) benchmark::DoNotOptimize(interferometer::qcre_ccr_closed_form(bs, 0.4));
}
BENCHMARK(BM_ClosedFormQcre);

static void BM_BruteForceQcre(benchmark::State& state) {
  const interferometer::BeamSplitterControl bs(0.6);
  const interferometer::PhaseShift phi(1.1);
  const auto spins = interferometer::SpinPair::with_overlap(0.4);
  for (auto _ : state) {
    const auto st = interferometer::build_state(interferometer::Experiment::kQcre, bs, phi, spins);
    benchmark::DoNotOptimize(ccr::ccr_triple(interferometer::reduced_path_state(st.psi)));
  }
}
BENCHMARK(BM_BruteForceQcre);

static void BM_ThetaIntegrate(benchmark::State& state) {
  const wigner::NewtonianMetric metric(10.0);
  const wigner::InterferometerGeometry square;
  const double t = square.transit_time();
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wigner::theta_integrate(1, t, square, metric, {steps}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ThetaIntegrate)->Arg(1000)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

// libbenchmark_main.a ships LTO bytecode that does not match every GCC 11 point release.
BENCHMARK_MAIN();
