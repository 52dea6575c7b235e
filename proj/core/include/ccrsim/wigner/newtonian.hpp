#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "ccrsim/wigner/frame.hpp"
#include "ccrsim/wigner/rotation.hpp"

// Wigner rotations accumulated by a spin travelling the two arms of a
// rectangular interferometer (height h, horizontal length L, lower arm at
// x0) near the Earth. Lengths in metres, lab times in seconds, the speed u as
// a fraction of c.
namespace ccrsim::wigner {

enum class ArmOrder { kHorizontalFirst, kVerticalFirst };

struct InterferometerGeometry {
  double length = 1.0;       // L
  double height = 1.0;       // h
  double base_height = 0.0;  // x0
  double speed = 0.1;        // u
  // Path 0 runs along the bottom then up; path 1 goes up then along the top.
  std::array<ArmOrder, 2> arm_order{ArmOrder::kHorizontalFirst, ArmOrder::kVerticalFirst};

  // Throws InvalidInput unless L > 0, h >= 0, 0 < u < 1, all finite.
  void validate() const;
  // (L + h)/u, in seconds: both arms have the same length and speed.
  double transit_time() const;
  // Height of the horizontal run of `path`.
  double horizontal_run_height(unsigned path) const;
};

struct WignerAngle {
  double theta = 0.0;  // radians, about the local y axis
  unsigned path = 0;
};

// Horizontal distance covered by `path` after lab time t. Throws
// InvalidInput if t is outside [0, transit_time()].
double horizontal_progress(unsigned path, double t, const InterferometerGeometry& geom);

// Theta(eta) = -gamma (l_eta(t)/u)/sqrt(1 + 2g x_eta), gamma = g u sqrt(1 + u^2),
// with x_eta the height of the path's horizontal run.
WignerAngle theta_closed_form(unsigned path, double t, const InterferometerGeometry& geom,
                              const NewtonianMetric& metric);

// Where the rotation generator is switched on along a path.
enum class GeneratorSupport {
  // Evaluate the generator from the frame velocity on every segment. It is
  // non-zero only while the particle moves horizontally.
  kFrameVelocity,
  // Apply the pz-only generator magnitude while the particle moves
  // vertically instead, and nothing on horizontal runs.
  kVerticalSegments,
};

enum class TimeDilation {
  kGravitationalOnly,  // dtau/dt = sqrt(1 + 2gx); the kinematic part is common to both arms
  kFull,               // dtau/dt = sqrt(1 + 2gx - u^2)
};

struct IntegrationOptions {
  std::size_t step_count = 100'000;
  GeneratorSupport support = GeneratorSupport::kFrameVelocity;
  TimeDilation dilation = TimeDilation::kGravitationalOnly;
};

inline constexpr std::size_t kMinIntegrationSteps = 100;

struct IntegratedRotation {
  WignerAngle angle;  // integral of theta^1_3 dtau, compensated summation
  Su2 rotation;       // ordered product of the per-step rotations
  std::size_t steps = 0;
};

// Time-ordered product of exp((i/2) w.sigma dtau) along the path's world
// line up to lab time t, midpoint rule, with step boundaries aligned to the
// path's corners. Throws ResolutionError if step_count < 100.
IntegratedRotation theta_integrate(unsigned path, double t, const InterferometerGeometry& geom,
                                   const NewtonianMetric& metric, const IntegrationOptions& options = {});

inline constexpr double kSeriesThreshold = 1e-6;

struct Distinguishability {
  double delta_theta = 0.0;   // Theta(1) - Theta(0)
  double cosine_form = 0.0;   // 1 - |<tau0|tau1>| evaluated with cos
  std::optional<double> series_form;  // small-angle series, when |delta| < 1e-6
  double value = 0.0;         // series form when present, else cosine form
};

// 1 - |<tau0|tau1>| at lab time t. Below |delta| = 1e-6 the cosine rounds to
// 1, so the series in delta is used instead.
Distinguishability distinguishability(double t, const InterferometerGeometry& geom,
                                      const NewtonianMetric& metric, const BlochSpinState& tau);

// Same, from a known angle difference.
Distinguishability distinguishability_from_delta(double delta_theta, const BlochSpinState& tau);

struct MaxRotationDifference {
  double delta_theta = 0.0;  // gamma L/u = g sqrt(1 + u^2) L (geometric units)
  double small_angle = 0.0;  // delta^2/2, from cos(x) ~ 1 - x^2/2 at x = delta
  double as_printed = 0.0;   // g^2 (1 + u^2) L^2, without the 1/2
};

// Largest effect estimate, at the instant path 0 has finished its horizontal
// run and path 1 has not started its own, with x0 = 0. SI inputs.
MaxRotationDifference max_rotation_difference(double g_si, double speed, double length);

// |cos(rate * delta_t)| with rate = gamma dV/2 in 1/s and delta_t in s.
double newtonian_overlap(double phase_rate, double delta_t);

// gamma dV/2 in 1/s for the given geometry (dV = g h).
double newtonian_phase_rate(const NewtonianMetric& metric, const InterferometerGeometry& geom);

}  // namespace ccrsim::wigner
