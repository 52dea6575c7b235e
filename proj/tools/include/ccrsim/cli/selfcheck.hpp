#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ccrsim/interferometer.hpp"

namespace ccrsim::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // worst deviation or the failure message
};

struct SelfcheckOptions {
  // Closed form compared against the brute-force pipeline. kAsPrinted
  // reproduces the cos^2 exponent and must make oracle_equivalence fail.
  interferometer::QcreLambdaForm lambda_form = interferometer::QcreLambdaForm::kMatrixConsistent;
  std::size_t random_states = 1000;
  std::size_t integrator_steps = 1'000'000;
};

// ccr_identity, oracle_equivalence, visibility_equality, tetrad_orthonormality,
// integrator_convergence and flat_limit, in that order.
std::vector<CheckResult> selfcheck(const SelfcheckOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

// One "PASS name  detail" / "FAIL name  detail" line per check.
void print_report(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace ccrsim::cli
