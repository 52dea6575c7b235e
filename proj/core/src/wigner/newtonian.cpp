#include "ccrsim/wigner/newtonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ccrsim/errors.hpp"
#include "ccrsim/wigner/units.hpp"

namespace ccrsim::wigner {

namespace {

// Relative slack on the lab-time range check.
constexpr double kTimeSlack = 1e-12;

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// One straight piece of an arm, in geometric units.
struct Segment {
  double start = 0.0;     // lab time c t at which it begins
  double duration = 0.0;  // c dt spent on it
  double x_start = 0.0;   // height at the beginning
  bool vertical = false;
};

std::vector<Segment> arm_segments(unsigned path, const InterferometerGeometry& geom) {
  const double horizontal = geom.length / geom.speed;
  const double vertical = geom.height / geom.speed;
  const double x0 = geom.base_height;
  if (geom.arm_order[path] == ArmOrder::kHorizontalFirst) {
    return {{0.0, horizontal, x0, false}, {horizontal, vertical, x0, true}};
  }
  return {{0.0, vertical, x0, true}, {vertical, horizontal, x0 + geom.height, false}};
}

void require_path(unsigned path) {
  if (path > 1) throw InvalidInput("path index must be 0 or 1");
}

double checked_time(double t, const InterferometerGeometry& geom) {
  const double total = geom.transit_time();
  if (!std::isfinite(t) || t < -kTimeSlack * total || t > total * (1.0 + kTimeSlack)) {
    throw InvalidInput("lab time " + format_value(t) + " s outside [0, " + format_value(total) + "] s");
  }
  return std::clamp(t, 0.0, total);
}

}  // namespace

void InterferometerGeometry::validate() const {
  if (!(std::isfinite(length) && length > 0.0)) throw InvalidInput("interferometer length L must be positive");
  if (!(std::isfinite(height) && height >= 0.0)) throw InvalidInput("interferometer height h must be non-negative");
  if (!std::isfinite(base_height)) throw InvalidInput("base height x0 must be finite");
  if (!(speed > 0.0 && speed < 1.0)) throw InvalidInput("speed u must lie in (0, 1) in units of c");
}

double InterferometerGeometry::transit_time() const {
  validate();
  return (length + height) / (speed * kSpeedOfLight);
}

double InterferometerGeometry::horizontal_run_height(unsigned path) const {
  require_path(path);
  return arm_order[path] == ArmOrder::kHorizontalFirst ? base_height : base_height + height;
}

double horizontal_progress(unsigned path, double t, const InterferometerGeometry& geom) {
  require_path(path);
  const double travelled = geom.speed * kSpeedOfLight * checked_time(t, geom);
  if (geom.arm_order[path] == ArmOrder::kHorizontalFirst) return std::min(travelled, geom.length);
  return std::clamp(travelled - geom.height, 0.0, geom.length);
}

WignerAngle theta_closed_form(unsigned path, double t, const InterferometerGeometry& geom,
                              const NewtonianMetric& metric) {
  const double ell = horizontal_progress(path, t, geom);
  const double u = geom.speed;
  const double gamma = metric.g() * u * std::sqrt(1.0 + u * u);
  const double lapse = metric.lapse(geom.horizontal_run_height(path));
  const double theta = -gamma * (ell / u) / lapse;
  return {theta == 0.0 ? 0.0 : theta, path};
}

IntegratedRotation theta_integrate(unsigned path, double t, const InterferometerGeometry& geom,
                                   const NewtonianMetric& metric, const IntegrationOptions& options) {
  require_path(path);
  if (options.step_count < kMinIntegrationSteps) {
    throw ResolutionError("theta_integrate: step_count " + std::to_string(options.step_count) +
                          " is below the minimum of " + std::to_string(kMinIntegrationSteps));
  }
  const double t_end = time_to_geometric(checked_time(t, geom));
  const double u = geom.speed;

  IntegratedRotation result{{0.0, path}, Su2::identity(), 0};
  if (t_end == 0.0) return result;

  CompensatedSum theta;
  for (const Segment& seg : arm_segments(path, geom)) {
    const double piece = std::min(seg.start + seg.duration, t_end) - seg.start;
    if (piece <= 0.0) continue;
    const auto n = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(static_cast<double>(options.step_count) * piece / t_end)));
    const double dt = piece / static_cast<double>(n);

    // The generator the segment actually uses, in the frame.
    FrameVelocity velocity;
    bool active = true;
    switch (options.support) {
      case GeneratorSupport::kFrameVelocity:
        velocity = seg.vertical ? FrameVelocity{u, 0.0} : FrameVelocity{0.0, u};
        break;
      case GeneratorSupport::kVerticalSegments:
        velocity = FrameVelocity{0.0, u};
        active = seg.vertical;
        break;
    }
    if (!active) continue;

    double cached_x = std::nan("");
    WignerGenerator generator(Mat3{});
    for (std::size_t k = 0; k < n; ++k) {
      const double elapsed = (static_cast<double>(k) + 0.5) * dt;
      const double x = seg.vertical ? seg.x_start + u * elapsed : seg.x_start;
      if (x != cached_x) {
        generator = wigner_generator(metric, x, velocity);
        cached_x = x;
      }
      const double rate = options.dilation == TimeDilation::kGravitationalOnly
                              ? metric.lapse(x)
                              : proper_time_rate(metric, x, u);
      const double dtau = rate * dt;
      result.rotation = Su2::from_generator(generator.axial(), dtau) * result.rotation;
      theta.add(generator(1, 3) * dtau);
    }
    result.steps += n;
  }
  const double total = theta.value();
  result.angle.theta = total == 0.0 ? 0.0 : total;
  return result;
}

Distinguishability distinguishability_from_delta(double delta_theta, const BlochSpinState& tau) {
  Distinguishability d;
  d.delta_theta = delta_theta;
  d.cosine_form = 1.0 - spin_overlap_from_thetas(0.0, delta_theta, tau).modulus();
  if (std::abs(delta_theta) < kSeriesThreshold) {
    // 1 - sqrt(1 - k sin^2(delta/2)), k = 1 - n_y^2, expanded to fourth order.
    const double ny = tau.bloch_y();
    const double k = 1.0 - ny * ny;
    const double d2 = delta_theta * delta_theta;
    const double d4 = d2 * d2;
    d.series_form = k * d2 / 8.0 - k * d4 / 96.0 + k * k * d4 / 128.0;
    d.value = *d.series_form;
  } else {
    d.value = d.cosine_form;
  }
  return d;
}

Distinguishability distinguishability(double t, const InterferometerGeometry& geom,
                                      const NewtonianMetric& metric, const BlochSpinState& tau) {
  const double theta0 = theta_closed_form(0, t, geom, metric).theta;
  const double theta1 = theta_closed_form(1, t, geom, metric).theta;
  return distinguishability_from_delta(theta1 - theta0, tau);
}

MaxRotationDifference max_rotation_difference(double g_si, double speed, double length) {
  if (!(speed > 0.0 && speed < 1.0)) throw InvalidInput("speed u must lie in (0, 1) in units of c");
  if (!(std::isfinite(length) && length >= 0.0)) throw InvalidInput("length L must be non-negative");
  const NewtonianMetric metric(g_si);
  MaxRotationDifference out;
  out.delta_theta = metric.g() * std::sqrt(1.0 + speed * speed) * length;
  out.as_printed = out.delta_theta * out.delta_theta;
  out.small_angle = 0.5 * out.as_printed;
  return out;
}

double newtonian_overlap(double phase_rate, double delta_t) {
  if (!(std::isfinite(delta_t) && delta_t >= 0.0)) throw InvalidInput("delta T must be non-negative");
  if (!std::isfinite(phase_rate)) throw InvalidInput("phase rate must be finite");
  return std::min(1.0, std::abs(std::cos(phase_rate * delta_t)));
}

double newtonian_phase_rate(const NewtonianMetric& metric, const InterferometerGeometry& geom) {
  geom.validate();
  const double u = geom.speed;
  const double gamma = metric.g() * u * std::sqrt(1.0 + u * u);  // 1/m
  const double delta_v = metric.g() * geom.height;               // dimensionless
  return 0.5 * gamma * delta_v * kSpeedOfLight;                  // per second
}

}  // namespace ccrsim::wigner
