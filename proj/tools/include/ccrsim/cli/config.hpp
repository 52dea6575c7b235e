#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccrsim/interferometer.hpp"

namespace ccrsim::cli {

enum class Mode { kFlat, kNewtonian };

enum class SweepVariable { kAlpha, kPhi, kOverlap, kTime, kDeltaT, kLength, kHeight };

std::string_view to_string(SweepVariable v);
std::string_view to_string(Mode m);
std::string_view to_string(interferometer::Experiment e);

struct Sweep {
  SweepVariable variable = SweepVariable::kAlpha;
  double start = 0.0;
  double stop = 0.0;
  std::size_t steps = 1;

  // start + (stop - start) i/(steps - 1); the last point is exactly `stop`.
  double value(std::size_t i) const;
};

// One interferometer run. Lengths in metres, times in seconds, g in m/s^2,
// the speed as a fraction of c, angles in radians.
struct ScenarioConfig {
  interferometer::Experiment experiment = interferometer::Experiment::kQcre;
  double alpha = 0.0;
  double phi = 0.0;
  double spin_theta = 1.5707963267948966;  // Bloch polar angle; the spin stays in the xz plane
  Mode mode = Mode::kFlat;
  double g = 10.0;
  double x0 = 0.0;
  double h = 1.0;
  double L = 1.0;
  double u = 0.1;
  // Flat mode: |<tau0|tau1>|, 1 when unset.
  std::optional<double> overlap;
  // Newtonian mode: lab time at which the spins are compared. Defaults to
  // L/u, when path 0 has finished its horizontal run.
  std::optional<double> t;
  // Newtonian mode, visibility form: overlap |cos(rate * deltaT)|.
  std::optional<double> delta_t;
  // Rate gamma dV/2 in 1/s for the deltaT form; derived from g, h, u when unset.
  std::optional<double> phase_rate;
  std::optional<Sweep> sweep;

  // Throws InvalidInput naming the offending field.
  void validate() const;

  // Set one field from its textual form, as in a config file or a flag.
  // Throws InvalidInput for unknown keys and malformed values.
  void set(std::string_view key, std::string_view value);

  // Same configuration with the sweep variable set to `value` and the sweep removed.
  ScenarioConfig at(SweepVariable variable, double value) const;
};

// Keys accepted by ScenarioConfig::set, in documentation order.
const std::vector<std::string>& config_keys();

// Number with an optional `deg` suffix, converted to radians.
double parse_angle(std::string_view text, std::string_view field);
double parse_number(std::string_view text, std::string_view field);
// var:start:stop:steps
Sweep parse_sweep(std::string_view text);

// Flat key=value file; '#' starts a comment. Applied on top of `base`.
ScenarioConfig load_config(const std::filesystem::path& path, ScenarioConfig base = {});

}  // namespace ccrsim::cli
