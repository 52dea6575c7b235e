#include "ccrsim/cli/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "ccrsim/ccr.hpp"
#include "ccrsim/errors.hpp"
#include "ccrsim/wigner/newtonian.hpp"
#include "ccrsim/wigner/units.hpp"

namespace ccrsim::cli {

namespace {

using namespace interferometer;

struct SpinInput {
  SpinPair spins;
  double overlap;
  double delta_theta = 0.0;
  double distinguishability = 0.0;
};

SpinInput flat_spins(const ScenarioConfig& c) {
  const double o = c.overlap.value_or(1.0);
  return {SpinPair::with_overlap(o), o, 0.0, 1.0 - o};
}

SpinInput newtonian_spins(const ScenarioConfig& c) {
  const wigner::NewtonianMetric metric(c.g);
  wigner::InterferometerGeometry geom;
  geom.length = c.L;
  geom.height = c.h;
  geom.base_height = c.x0;
  geom.speed = c.u;
  geom.validate();

  if (c.delta_t) {
    const double rate = c.phase_rate.value_or(wigner::newtonian_phase_rate(metric, geom));
    const double o = wigner::newtonian_overlap(rate, *c.delta_t);
    return {SpinPair::with_overlap(o), o, 0.0, 1.0 - o};
  }

  const double t = c.t.value_or(c.L / (c.u * wigner::kSpeedOfLight));
  const double theta0 = wigner::theta_closed_form(0, t, geom, metric).theta;
  const double theta1 = wigner::theta_closed_form(1, t, geom, metric).theta;
  const wigner::BlochSpinState tau{c.spin_theta, 0.0};
  auto spins = wigner::spin_pair_from_thetas(theta0, theta1, tau);
  const double o = spins.overlap().modulus();
  const auto d = wigner::distinguishability_from_delta(theta1 - theta0, tau);
  return {std::move(spins), o, theta1 - theta0, d.value};
}

double tidy(double v) { return v == 0.0 ? 0.0 : v; }

}  // namespace

SweepRow evaluate(const ScenarioConfig& config) {
  config.validate();
  const BeamSplitterControl bs(config.alpha);
  const PhaseShift phase(config.phi);
  const SpinInput in = config.mode == Mode::kFlat ? flat_spins(config) : newtonian_spins(config);

  const auto state = build_state(config.experiment, bs, phase, in.spins);
  const auto triple = ccr::ccr_triple(reduced_path_state(state.psi));
  const auto out = output_state(state, config.experiment);

  SweepRow row;
  row.coherence = tidy(triple.coherence);
  row.predictability = tidy(triple.predictability);
  row.entropy = tidy(triple.entanglement_entropy);
  row.visibility = tidy(visibility(bs, in.overlap));
  row.overlap_modulus = in.overlap;
  row.detector_p0 = detector_probability_born(out, 0);
  row.delta_theta = tidy(in.delta_theta);
  row.distinguishability = tidy(in.distinguishability);
  if (std::abs(row.coherence + row.predictability + row.entropy - 1.0) > ccr::kIdentityTolerance) {
    throw ConsistencyError("CCR identity violated in an emitted row");
  }
  return row;
}

SweepTable run_scenario(const ScenarioConfig& config) {
  config.validate();
  if (!config.sweep) {
    SweepTable table{"row", {evaluate(config)}};
    return table;
  }

  const Sweep& sweep = *config.sweep;
  SweepTable table{std::string(to_string(sweep.variable)), std::vector<SweepRow>(sweep.steps)};
  std::vector<std::exception_ptr> errors(sweep.steps);

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, sweep.steps / 8));
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < sweep.steps; i += workers) {
      try {
        const double v = sweep.value(i);
        table.rows[i] = evaluate(config.at(sweep.variable, v));
        table.rows[i].value = v;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
  }
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const InvalidInput& e) {
      throw InvalidInput("sweep point " + std::to_string(i) + ": " + e.what());
    }
  }
  return table;
}

}  // namespace ccrsim::cli
