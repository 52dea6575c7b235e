#include "ccrsim/cli/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>

#include "ccrsim/ccr.hpp"
#include "ccrsim/errors.hpp"
#include "ccrsim/qcore/entropy.hpp"
#include "ccrsim/wigner/newtonian.hpp"

namespace ccrsim::cli {

namespace {

using namespace interferometer;
using qcore::Factor;

constexpr double kPi = std::numbers::pi;
const std::array<double, 5> kOverlaps{0.0, 0.25, 0.5, 0.75, 1.0};

double grid(double stop, int i, int n) { return i == n - 1 ? stop : stop * i / (n - 1); }

std::string worst_text(double worst, double tol) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "worst %.3g (tolerance %.0e)", worst, tol);
  return buf;
}

CheckResult bounded(std::string name, double worst, double tol) {
  return {std::move(name), worst <= tol, worst_text(worst, tol)};
}

double triple_diff(const ccr::CcrTriple& a, const ccr::CcrTriple& b) {
  return std::max({std::abs(a.coherence - b.coherence), std::abs(a.predictability - b.predictability),
                   std::abs(a.entanglement_entropy - b.entanglement_entropy)});
}

ccr::CcrTriple brute_force(Experiment e, double alpha, double phi, double o) {
  const auto st = build_state(e, BeamSplitterControl(alpha), PhaseShift(phi), SpinPair::with_overlap(o));
  return ccr::ccr_triple(reduced_path_state(st.psi));
}

CheckResult ccr_identity(std::size_t random_states) {
  std::mt19937_64 rng(20240601);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (std::size_t n = 0; n < random_states; ++n) {
    std::vector<qcore::Complex> amps(8);
    for (auto& a : amps) a = {normal(rng), normal(rng)};
    const auto psi = qcore::PureState::normalized({Factor::kPath, Factor::kSpin, Factor::kBs}, amps);
    const auto t = ccr::ccr_triple(qcore::partial_trace(qcore::density_from_pure(psi), {Factor::kPath}));
    worst = std::max(worst, std::abs(t.sum() - 1.0));
  }
  for (auto e : {Experiment::kQdce, Experiment::kQcre})
    for (int i = 0; i < 21; ++i)
      for (int j = 0; j < 21; ++j)
        for (double o : kOverlaps)
          worst = std::max(worst, std::abs(brute_force(e, grid(kPi / 2, i, 21), grid(2 * kPi, j, 21), o).sum() - 1.0));
  return bounded("ccr_identity", worst, ccr::kIdentityTolerance);
}

CheckResult oracle_equivalence(QcreLambdaForm form) {
  double worst = 0.0;
  for (int i = 0; i < 21; ++i)
    for (int j = 0; j < 21; ++j)
      for (double o : kOverlaps) {
        const double alpha = grid(kPi / 2, i, 21), phi = grid(2 * kPi, j, 21);
        worst = std::max(worst, triple_diff(brute_force(Experiment::kQdce, alpha, phi, o), qdce_ccr_closed_form(o)));
        worst = std::max(worst, triple_diff(brute_force(Experiment::kQcre, alpha, phi, o),
                                            qcre_ccr_closed_form(BeamSplitterControl(alpha), o, form)));
      }
  return bounded("oracle_equivalence", worst, 1e-10);
}

CheckResult visibility_equality() {
  double worst = 0.0;
  for (int i = 0; i < 21; ++i)
    for (double o : kOverlaps) {
      const BeamSplitterControl bs(grid(kPi / 2, i, 21));
      const auto spins = SpinPair::with_overlap(o);
      const double v_qdce = empirical_visibility(Experiment::kQdce, bs, spins);
      const double v_qcre = empirical_visibility(Experiment::kQcre, bs, spins);
      worst = std::max({worst, std::abs(v_qdce - v_qcre), std::abs(v_qdce - visibility(bs, o))});
    }
  return bounded("visibility_equality", worst, 1e-9);
}

CheckResult tetrad_orthonormality() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> height(-100.0, 1e4);
  const wigner::NewtonianMetric metric(10.0);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const double x = height(rng);
    const auto g = metric.components(x);
    const auto e = wigner::inverse_tetrad(metric, x);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        double s = 0.0;
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu) s += g[mu][nu] * e[a][mu] * e[b][nu];
        worst = std::max(worst, std::abs(s - wigner::kMinkowski[a][b]));
      }
  }
  return bounded("tetrad_orthonormality", worst, 1e-12);
}

CheckResult integrator_convergence(std::size_t steps) {
  const wigner::NewtonianMetric metric(10.0);
  const wigner::InterferometerGeometry square;
  double worst = 0.0;
  const double t_exit = square.transit_time();
  for (double t : {0.5 * t_exit, t_exit})
    for (unsigned path : {0u, 1u}) {
      const double closed = wigner::theta_closed_form(path, t, square, metric).theta;
      const double numeric = wigner::theta_integrate(path, t, square, metric, {steps}).angle.theta;
      const double scale = std::max(std::abs(closed), std::abs(numeric));
      worst = std::max(worst, scale == 0.0 ? 0.0 : std::abs(closed - numeric) / scale);
    }
  return bounded("integrator_convergence", worst, 1e-9);
}

CheckResult flat_limit() {
  const wigner::NewtonianMetric flat(0.0);
  const wigner::InterferometerGeometry square;
  const wigner::BlochSpinState tau{kPi / 2, 0.0};
  const double t = square.transit_time() / 2;
  const double th0 = wigner::theta_closed_form(0, t, square, flat).theta;
  const double th1 = wigner::theta_closed_form(1, t, square, flat).theta;
  const double numeric = wigner::theta_integrate(0, t, square, flat, {1000}).angle.theta;
  const auto spins = wigner::spin_pair_from_thetas(th0, th1, tau);
  double worst = std::abs(th0) + std::abs(th1) + std::abs(numeric) + std::abs(spins.overlap().modulus() - 1.0);
  for (int i = 0; i < 11; ++i) {
    const BeamSplitterControl bs(grid(kPi / 2, i, 11));
    for (auto e : {Experiment::kQdce, Experiment::kQcre}) {
      const auto st = build_state(e, bs, PhaseShift(0.3), spins);
      const auto rel = ccr::ccr_triple(reduced_path_state(st.psi));
      const auto nonrel = e == Experiment::kQdce ? qdce_ccr_closed_form(1.0) : qcre_ccr_closed_form(bs, 1.0);
      worst = std::max(worst, triple_diff(rel, nonrel));
    }
  }
  return bounded("flat_limit", worst, 1e-12);
}

CheckResult guarded(const std::string& name, const std::function<CheckResult()>& check) {
  try {
    return check();
  } catch (const std::exception& e) {
    return {name, false, std::string("threw: ") + e.what()};
  }
}

}  // namespace

std::vector<CheckResult> selfcheck(const SelfcheckOptions& options) {
  return {
      guarded("ccr_identity", [&] { return ccr_identity(options.random_states); }),
      guarded("oracle_equivalence", [&] { return oracle_equivalence(options.lambda_form); }),
      guarded("visibility_equality", [] { return visibility_equality(); }),
      guarded("tetrad_orthonormality", [] { return tetrad_orthonormality(); }),
      guarded("integrator_convergence", [&] { return integrator_convergence(options.integrator_steps); }),
      guarded("flat_limit", [] { return flat_limit(); }),
  };
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

void print_report(const std::vector<CheckResult>& results, std::ostream& out) {
  for (const auto& r : results) out << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
}

}  // namespace ccrsim::cli
