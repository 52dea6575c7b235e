#include "ccrsim/cli/figures.hpp"

#include <numbers>
#include <string>

#include "ccrsim/errors.hpp"
#include "ccrsim/wigner/units.hpp"

namespace ccrsim::cli {

namespace {

using interferometer::Experiment;

constexpr double kHalfPi = std::numbers::pi / 2;

ScenarioConfig flat(Experiment e) {
  ScenarioConfig c;
  c.experiment = e;
  c.mode = Mode::kFlat;
  return c;
}

CsvTable figure2() {
  auto c = flat(Experiment::kQcre);
  c.sweep = Sweep{SweepVariable::kAlpha, 0.0, kHalfPi, kCurvePoints};
  CsvTable t{"fig2.csv", {"alpha", "coherence", "predictability", "entropy"}, {}};
  for (const auto& r : run_scenario(c).rows) t.rows.push_back({r.value, r.coherence, r.predictability, r.entropy});
  return t;
}

CsvTable figure3() {
  auto c = flat(Experiment::kQdce);
  c.sweep = Sweep{SweepVariable::kOverlap, 0.0, 1.0, kCurvePoints};
  CsvTable t{"fig3.csv", {"overlap", "coherence", "predictability", "entropy"}, {}};
  for (const auto& r : run_scenario(c).rows) t.rows.push_back({r.value, r.coherence, r.predictability, r.entropy});
  return t;
}

std::vector<CsvTable> figure4() {
  CsvTable coherence{"fig4a_coherence.csv", {"alpha", "overlap", "coherence"}, {}};
  CsvTable entanglement{"fig4b_entanglement.csv", {"alpha", "overlap", "entropy"}, {}};
  const Sweep alphas{SweepVariable::kAlpha, 0.0, kHalfPi, kSurfacePoints};
  for (std::size_t i = 0; i < alphas.steps; ++i) {
    auto c = flat(Experiment::kQcre);
    c.alpha = alphas.value(i);
    c.sweep = Sweep{SweepVariable::kOverlap, 0.0, 1.0, kSurfacePoints};
    for (const auto& r : run_scenario(c).rows) {
      coherence.rows.push_back({c.alpha, r.value, r.coherence});
      entanglement.rows.push_back({c.alpha, r.value, r.entropy});
    }
  }
  return {coherence, entanglement};
}

CsvTable figure5() {
  CsvTable t{"fig5.csv", {"size_m", "t_s", "delta_theta", "distinguishability"}, {}};
  for (double size : kFigureSizes) {
    ScenarioConfig c;
    c.experiment = Experiment::kQdce;
    c.mode = Mode::kNewtonian;
    c.g = 10.0;
    c.u = 0.1;
    c.x0 = 0.0;
    c.L = size;
    c.h = size;
    c.sweep = Sweep{SweepVariable::kTime, 0.0, (c.L + c.h) / (c.u * wigner::kSpeedOfLight), kTracePoints};
    for (const auto& r : run_scenario(c).rows) t.rows.push_back({size, r.value, r.delta_theta, r.distinguishability});
  }
  return t;
}

CsvTable figure6() {
  CsvTable t{"fig6.csv", {"alpha", "delta_t", "visibility"}, {}};
  const Sweep alphas{SweepVariable::kAlpha, 0.0, kHalfPi, kSurfacePoints};
  for (std::size_t i = 0; i < alphas.steps; ++i) {
    ScenarioConfig c;
    c.experiment = Experiment::kQcre;
    c.mode = Mode::kNewtonian;
    c.alpha = alphas.value(i);
    c.phase_rate = 1.0;
    c.sweep = Sweep{SweepVariable::kDeltaT, 0.0, kHalfPi, kSurfacePoints};
    for (const auto& r : run_scenario(c).rows) t.rows.push_back({c.alpha, r.value, r.visibility});
  }
  return t;
}

}  // namespace

std::vector<CsvTable> figure_tables(int n) {
  switch (n) {
    case 2: return {figure2()};
    case 3: return {figure3()};
    case 4: return figure4();
    case 5: return {figure5()};
    case 6: return {figure6()};
    default: throw InvalidInput("figure: expected a number from 2 to 6, got " + std::to_string(n));
  }
}

std::vector<std::filesystem::path> write_figure(int n, const std::filesystem::path& dir) {
  const auto tables = figure_tables(n);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> paths;
  for (const auto& t : tables) {
    paths.push_back(dir / t.name);
    write_csv(t, paths.back());
  }
  return paths;
}

}  // namespace ccrsim::cli
