#include "ccrsim/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ccrsim/errors.hpp"
#include "ccrsim/qcore/entropy.hpp"

namespace ccrsim::interferometer {

using qcore::Factor;
using qcore::PureState;

namespace {

constexpr double kAngleSlack = 1e-12;
constexpr double kOverlapSlack = 1e-12;
constexpr double kZeroBranchProbability = 1e-24;

constexpr unsigned kIn = 0;
constexpr unsigned kOut = 1;

// Index into a path (x) spin (x) bs amplitude vector.
constexpr std::size_t idx(unsigned path, unsigned spin, unsigned bs) { return path * 4 + spin * 2 + bs; }

void require_path_spin_bs(const PureState& psi, const char* who) {
  const auto l = psi.labels();
  if (l.size() != 3 || l[0] != Factor::kPath || l[1] != Factor::kSpin || l[2] != Factor::kBs) {
    throw InvalidInput(std::string(who) + ": expected a path (x) spin (x) bs state");
  }
}

double spinor_norm(const Spinor& s) { return std::sqrt(std::norm(s[0]) + std::norm(s[1])); }

void require_normalized(const Spinor& s, const char* which) {
  if (std::abs(spinor_norm(s) - 1.0) > qcore::kNormTolerance) {
    throw InvalidInput(std::string("SpinPair: ") + which + " is not normalized");
  }
}

double overlap_in_range(double o) {
  if (!(o >= -kOverlapSlack && o <= 1.0 + kOverlapSlack)) {
    throw InvalidInput("overlap modulus " + format_value(o) + " outside [0, 1]");
  }
  return std::clamp(o, 0.0, 1.0);
}

// The amplitude pattern shared by both arrangements inside the arms:
// (|0>|tau0> + e^{i phi}|1>|tau1>)/sqrt2, scaled by `weight`, on bs = `branch`.
void add_arm_superposition(std::vector<qcore::Complex>& amps, const SpinPair& spins, PhaseShift phase,
                           double weight, unsigned branch) {
  const qcore::Complex phase_factor = std::polar(1.0, phase.phi());
  const double w = weight / std::numbers::sqrt2;
  for (unsigned s = 0; s < 2; ++s) {
    amps[idx(0, s, branch)] += w * spins.tau0()[s];
    amps[idx(1, s, branch)] += w * phase_factor * spins.tau1()[s];
  }
}

}  // namespace

BeamSplitterControl::BeamSplitterControl(double alpha) : alpha_(alpha) {
  constexpr double kHalfPi = std::numbers::pi / 2;
  if (!(alpha >= -kAngleSlack && alpha <= kHalfPi + kAngleSlack)) {
    throw InvalidInput("beam-splitter control alpha " + format_value(alpha) + " outside [0, pi/2]");
  }
  alpha_ = std::clamp(alpha, 0.0, kHalfPi);
}

double BeamSplitterControl::cos_alpha() const { return std::cos(alpha_); }
double BeamSplitterControl::sin_alpha() const { return std::sin(alpha_); }
double BeamSplitterControl::cos2() const {
  const double c = std::cos(alpha_);
  return c * c;
}

PhaseShift::PhaseShift(double phi) : phi_(phi) {
  if (!std::isfinite(phi)) throw InvalidInput("phase shift must be finite");
}

double PhaseShift::reduced() const {
  constexpr double kTwoPi = 2 * std::numbers::pi;
  double r = std::fmod(phi_, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r >= kTwoPi ? 0.0 : r;
}

SpinOverlap::SpinOverlap(Complex value) : value_(value) {
  if (!(std::abs(value) <= 1.0 + kOverlapSlack)) {
    throw InvalidInput("spin overlap modulus " + std::to_string(std::abs(value)) + " exceeds 1");
  }
}

double SpinOverlap::modulus() const { return std::min(1.0, std::abs(value_)); }

SpinPair::SpinPair(Spinor tau0, Spinor tau1) : tau0_(tau0), tau1_(tau1) {
  require_normalized(tau0_, "tau0");
  require_normalized(tau1_, "tau1");
}

SpinPair SpinPair::identical(Spinor tau) { return SpinPair(tau, tau); }

SpinPair SpinPair::with_overlap(double modulus) {
  const double m = overlap_in_range(modulus);
  return SpinPair({1.0, 0.0}, {m, std::sqrt(std::max(0.0, 1.0 - m * m))});
}

SpinOverlap SpinPair::overlap() const {
  return SpinOverlap(std::conj(tau0_[0]) * tau1_[0] + std::conj(tau0_[1]) * tau1_[1]);
}

InterferometerState build_qdce_state(BeamSplitterControl bs, PhaseShift phase, const SpinPair& spins) {
  std::vector<qcore::Complex> amps(8);
  add_arm_superposition(amps, spins, phase, bs.cos_alpha(), kIn);
  add_arm_superposition(amps, spins, phase, bs.sin_alpha(), kOut);
  return {Experiment::kQdce, PureState({Factor::kPath, Factor::kSpin, Factor::kBs}, std::move(amps))};
}

InterferometerState build_qcre_state(BeamSplitterControl bs, PhaseShift phase, const SpinPair& spins) {
  std::vector<qcore::Complex> amps(8);
  add_arm_superposition(amps, spins, phase, bs.cos_alpha(), kIn);
  for (unsigned s = 0; s < 2; ++s) amps[idx(0, s, kOut)] += bs.sin_alpha() * spins.tau0()[s];
  return {Experiment::kQcre, PureState({Factor::kPath, Factor::kSpin, Factor::kBs}, std::move(amps))};
}

InterferometerState build_state(Experiment e, BeamSplitterControl bs, PhaseShift phase,
                                const SpinPair& spins) {
  return e == Experiment::kQdce ? build_qdce_state(bs, phase, spins) : build_qcre_state(bs, phase, spins);
}

qcore::DensityOperator reduced_path_state(const PureState& psi) {
  if (!psi.position_of(Factor::kPath)) throw InvalidInput("reduced_path_state: state has no path factor");
  return qcore::partial_trace(qcore::density_from_pure(psi), {Factor::kPath});
}

ccr::CcrTriple qdce_ccr_closed_form(double overlap_modulus) {
  const double o = overlap_in_range(overlap_modulus);
  const double s = qcore::binary_entropy(0.5 * (1.0 + o));
  return {1.0 - s, 0.0, s};
}

ccr::CcrTriple qcre_ccr_closed_form(BeamSplitterControl bs, double overlap_modulus, QcreLambdaForm form) {
  const double o = overlap_in_range(overlap_modulus);
  const double c2 = bs.cos2();
  const double first = form == QcreLambdaForm::kMatrixConsistent ? o * o * c2 * c2 : o * o * c2;
  const double lambda = std::sqrt(first + (1.0 - c2) * (1.0 - c2));

  ccr::CcrTriple t;
  t.predictability = 1.0 - qcore::binary_entropy(0.5 * (2.0 - c2));
  t.entanglement_entropy = qcore::binary_entropy(0.5 * (1.0 + std::min(lambda, 1.0)));
  t.coherence = 1.0 - t.predictability - t.entanglement_entropy;
  return t;
}

PureState output_state(const InterferometerState& state, Experiment experiment) {
  if (state.experiment != experiment) {
    throw InvalidInput("output_state: experiment tag does not match the state");
  }
  require_path_spin_bs(state.psi, "output_state");
  const auto in = state.psi.amplitudes();
  std::vector<qcore::Complex> out(in.begin(), in.end());
  const double r = 1.0 / std::numbers::sqrt2;
  for (unsigned b = 0; b < 2; ++b) {
    if (experiment == Experiment::kQdce && b == kOut) continue;  // BS absent on |out>
    for (unsigned s = 0; s < 2; ++s) {
      const auto a0 = in[idx(0, s, b)];
      const auto a1 = in[idx(1, s, b)];
      out[idx(0, s, b)] = r * (a0 + a1);
      out[idx(1, s, b)] = r * (a0 - a1);
    }
  }
  return PureState({Factor::kPath, Factor::kSpin, Factor::kBs}, std::move(out));
}

double detector_probability_born(const PureState& output, unsigned detector) {
  if (detector > 1) throw InvalidInput("detector index must be 0 or 1");
  require_path_spin_bs(output, "detector_probability_born");
  double p = 0.0;
  for (unsigned s = 0; s < 2; ++s)
    for (unsigned b = 0; b < 2; ++b) p += std::norm(output.amplitudes()[idx(detector, s, b)]);
  return p;
}

double detector_probability(unsigned detector, BeamSplitterControl bs, PhaseShift phase,
                            double overlap_modulus) {
  if (detector > 1) throw InvalidInput("detector index must be 0 or 1");
  const double o = overlap_in_range(overlap_modulus);
  const double sign = detector == 0 ? 1.0 : -1.0;
  return 0.5 * (1.0 + sign * o * std::cos(phase.phi()) * bs.cos2());
}

double visibility(BeamSplitterControl bs, double overlap_modulus) {
  return overlap_in_range(overlap_modulus) * bs.cos2();
}

double empirical_visibility(Experiment experiment, BeamSplitterControl bs, const SpinPair& spins,
                            std::size_t phase_samples) {
  if (phase_samples < 2) throw InvalidInput("empirical_visibility: need at least two phase samples");
  double p_max = 0.0;
  double p_min = 1.0;
  for (std::size_t k = 0; k < phase_samples; ++k) {
    const PhaseShift phase(2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(phase_samples));
    const auto out = output_state(build_state(experiment, bs, phase, spins), experiment);
    const double p = detector_probability_born(out, 0);
    p_max = std::max(p_max, p);
    p_min = std::min(p_min, p);
  }
  return (p_max - p_min) / (p_max + p_min);
}

PostSelection postselect_bs(const PureState& psi, BsBranch branch) {
  require_path_spin_bs(psi, "postselect_bs");
  const unsigned b = branch == BsBranch::kIn ? kIn : kOut;
  std::vector<qcore::Complex> amps(4);
  double p = 0.0;
  for (unsigned path = 0; path < 2; ++path)
    for (unsigned s = 0; s < 2; ++s) {
      const auto a = psi.amplitudes()[idx(path, s, b)];
      amps[path * 2 + s] = a;
      p += std::norm(a);
    }
  if (p <= kZeroBranchProbability) {
    throw ConditioningError(std::string("postselect_bs: branch '") + (b == kIn ? "in" : "out") +
                            "' has zero probability");
  }
  return {PureState::normalized({Factor::kPath, Factor::kSpin}, std::move(amps)), p};
}

}  // namespace ccrsim::interferometer
