#pragma once

#include <array>
#include <cstddef>

#include "ccrsim/ccr.hpp"
#include "ccrsim/qcore/state.hpp"

// Delayed-choice Mach-Zehnder interferometers with a quantum-controlled beam
// splitter:
//   QDCE - standard first BS, second BS in a superposition of in/out;
//   QCRE - first BS in a superposition of in/out, standard second BS.
// Joint states are ordered path (x) spin (x) bs, with bs |in> = |0>.
namespace ccrsim::interferometer {

using qcore::Complex;
using Spinor = std::array<Complex, 2>;

enum class Experiment { kQdce, kQcre };
enum class BsBranch { kIn, kOut };

// Controlled beam splitter |BS> = cos(alpha)|in> + sin(alpha)|out>.
class BeamSplitterControl {
 public:
  // Throws InvalidInput unless 0 <= alpha <= pi/2 (1e-12 slack, then clamped).
  explicit BeamSplitterControl(double alpha);
  double alpha() const { return alpha_; }
  double cos_alpha() const;
  double sin_alpha() const;
  double cos2() const;

 private:
  double alpha_;
};

// Relative phase on path 1.
class PhaseShift {
 public:
  explicit PhaseShift(double phi);  // throws InvalidInput if not finite
  double phi() const { return phi_; }
  double reduced() const;  // in [0, 2pi)

 private:
  double phi_;
};

// <tau0|tau1>.
class SpinOverlap {
 public:
  explicit SpinOverlap(Complex value);  // throws InvalidInput if |value| > 1 + 1e-12
  Complex value() const { return value_; }
  double modulus() const;  // clamped to [0, 1]

 private:
  Complex value_;
};

// Spin states carried along path 0 and path 1.
class SpinPair {
 public:
  SpinPair(Spinor tau0, Spinor tau1);  // each must be normalized within 1e-12
  static SpinPair identical(Spinor tau);
  // tau0 = |0>, tau1 = m|0> + sqrt(1 - m^2)|1>, so <tau0|tau1> = m.
  static SpinPair with_overlap(double modulus);

  const Spinor& tau0() const { return tau0_; }
  const Spinor& tau1() const { return tau1_; }
  SpinOverlap overlap() const;

 private:
  Spinor tau0_;
  Spinor tau1_;
};

// Joint state inside the interferometer, tagged with the arrangement it
// belongs to so the matching output BS can be applied.
struct InterferometerState {
  Experiment experiment;
  qcore::PureState psi;
};

// (1/sqrt2)(|0>|tau0> + e^{i phi}|1>|tau1>) (x) (cos a|in> + sin a|out>).
InterferometerState build_qdce_state(BeamSplitterControl bs, PhaseShift phase, const SpinPair& spins);

// cos a (|0>|tau0> + e^{i phi}|1>|tau1>)/sqrt2 |in> + sin a |0>|tau0>|out>.
InterferometerState build_qcre_state(BeamSplitterControl bs, PhaseShift phase, const SpinPair& spins);

InterferometerState build_state(Experiment e, BeamSplitterControl bs, PhaseShift phase,
                                const SpinPair& spins);

// Tr_{spin,bs} |psi><psi|. Throws InvalidInput if psi has no path factor.
qcore::DensityOperator reduced_path_state(const qcore::PureState& psi);

// QDCE with |<tau0|tau1>| = o: C = 1 - h(w), P = 0, S = h(w), w = (1 + o)/2.
ccr::CcrTriple qdce_ccr_closed_form(double overlap_modulus);

// Which square-root argument to use for the QCRE reduced-state spectrum.
// kMatrixConsistent uses o^2 cos^4(a) + (1 - cos^2 a)^2, the eigenvalue
// parameter of the reduced path matrix. kAsPrinted uses o^2 cos^2(a) in the
// first term; it exists only so the self-check can show it is caught.
enum class QcreLambdaForm { kMatrixConsistent, kAsPrinted };

// QCRE: P = 1 - h((2 - cos^2 a)/2), S = h((1 + lambda)/2), C = 1 - P - S.
ccr::CcrTriple qcre_ccr_closed_form(BeamSplitterControl bs, double overlap_modulus,
                                    QcreLambdaForm form = QcreLambdaForm::kMatrixConsistent);

// Apply the final beam splitter, |0> -> |x+>, |1> -> |x->: controlled on
// |in> for the QDCE, unconditional for the QCRE. Throws InvalidInput if
// `experiment` does not match the state's tag.
qcore::PureState output_state(const InterferometerState& state, Experiment experiment);

// Born-rule probability of detector `detector` (path 0 or 1) for an output state.
double detector_probability_born(const qcore::PureState& output, unsigned detector);

// (1/2)[1 + (-1)^eta o cos(phi) cos^2(a)]. Identical for both arrangements.
// Assumes a real, non-negative overlap; a complex overlap shifts phi by its argument.
double detector_probability(unsigned detector, BeamSplitterControl bs, PhaseShift phase,
                            double overlap_modulus);

// o cos^2(a).
double visibility(BeamSplitterControl bs, double overlap_modulus);

inline constexpr std::size_t kVisibilityPhaseSamples = 720;

// (p_max - p_min)/(p_max + p_min) of detector 0 over phi sampled uniformly on
// [0, 2pi), each sample propagated through the full output state.
double empirical_visibility(Experiment experiment, BeamSplitterControl bs, const SpinPair& spins,
                            std::size_t phase_samples = kVisibilityPhaseSamples);

struct PostSelection {
  qcore::PureState state;  // path (x) spin
  double probability;
};

// Project the controlled BS onto |in> or |out> and renormalize. Throws
// ConditioningError if the branch has (numerically) zero probability.
PostSelection postselect_bs(const qcore::PureState& psi, BsBranch branch);

}  // namespace ccrsim::interferometer
