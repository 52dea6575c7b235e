#pragma once

#include <string>
#include <vector>

#include "ccrsim/cli/config.hpp"

namespace ccrsim::cli {

struct SweepRow {
  double value = 0.0;  // the swept variable, 0 without a sweep
  double coherence = 0.0;
  double predictability = 0.0;
  double entropy = 0.0;
  double visibility = 0.0;
  double overlap_modulus = 1.0;
  double detector_p0 = 0.0;
  double delta_theta = 0.0;          // Theta(1) - Theta(0), newtonian time form only
  double distinguishability = 0.0;   // 1 - |<tau0|tau1>|, series form for tiny angles
};

struct SweepTable {
  std::string variable;  // header of the first column
  std::vector<SweepRow> rows;
};

// One row for a sweep-free configuration. The CCR comes from the partial
// trace of the built state and is checked against the identity.
SweepRow evaluate(const ScenarioConfig& config);

// Every sweep point, evaluated concurrently and returned in sweep order.
// Throws InvalidInput for a bad configuration; numerical failures propagate
// as the library's NumericalError/ConditioningError.
SweepTable run_scenario(const ScenarioConfig& config);

}  // namespace ccrsim::cli
