#include "ccrsim/wigner/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ccrsim/errors.hpp"
#include "ccrsim/wigner/units.hpp"

namespace ccrsim::wigner {

namespace {

constexpr int kT = 0;
constexpr int kX = 1;

Mat4 zero_mat4() { return Mat4{}; }

}  // namespace

NewtonianMetric::NewtonianMetric(double g_si) : g_si_(g_si), g_(acceleration_to_geometric(g_si)) {
  if (!std::isfinite(g_si) || g_si < 0.0) {
    throw InvalidInput("gravitational acceleration must be finite and non-negative");
  }
}

double NewtonianMetric::lapse_squared(double x) const {
  const double n2 = 1.0 + 2.0 * g_ * x;
  if (!(n2 > 0.0)) {
    throw DomainError("1 + 2gx = " + std::to_string(n2) + " at height " + std::to_string(x) +
                      " m; the static frame does not exist there");
  }
  return n2;
}

double NewtonianMetric::lapse(double x) const { return std::sqrt(lapse_squared(x)); }

Mat4 NewtonianMetric::components(double x) const {
  Mat4 g = kMinkowski;
  g[kT][kT] = -lapse_squared(x);
  return g;
}

Mat4 NewtonianMetric::inverse_components(double x) const {
  Mat4 g = kMinkowski;
  g[kT][kT] = -1.0 / lapse_squared(x);
  return g;
}

Mat4 tetrad(const NewtonianMetric& m, double x) {
  Mat4 e = zero_mat4();
  e[0][kT] = m.lapse(x);
  for (int i = 1; i < 4; ++i) e[i][i] = 1.0;
  return e;
}

Mat4 inverse_tetrad(const NewtonianMetric& m, double x) {
  Mat4 e = zero_mat4();
  e[0][kT] = 1.0 / m.lapse(x);
  for (int i = 1; i < 4; ++i) e[i][i] = 1.0;
  return e;
}

Mat4 inverse_tetrad_gradient(const NewtonianMetric& m, double x) {
  // d/dx (1 + 2gx)^{-1/2} = -g (1 + 2gx)^{-3/2}
  Mat4 d = zero_mat4();
  const double n2 = m.lapse_squared(x);
  d[0][kT] = -m.g() / (n2 * std::sqrt(n2));
  return d;
}

Rank3 christoffel(const NewtonianMetric& m, double x) {
  Rank3 gamma{};
  const double n2 = m.lapse_squared(x);
  gamma[kX][kT][kT] = m.g();
  gamma[kT][kT][kX] = m.g() / n2;
  gamma[kT][kX][kT] = m.g() / n2;
  return gamma;
}

Rank3 spin_connection(const NewtonianMetric& m, double x) {
  const Mat4 e_up = tetrad(m, x);
  const Mat4 e_down = inverse_tetrad(m, x);
  const Mat4 de_down = inverse_tetrad_gradient(m, x);
  const Rank3 gamma = christoffel(m, x);

  Rank3 omega{};
  for (int a = 0; a < 4; ++a)
    for (int nu = 0; nu < 4; ++nu)
      for (int b = 0; b < 4; ++b) {
        double acc = 0.0;
        for (int sigma = 0; sigma < 4; ++sigma) {
          // nabla_nu e_b^sigma
          double cov = nu == kX ? de_down[b][sigma] : 0.0;
          for (int lam = 0; lam < 4; ++lam) cov += gamma[sigma][nu][lam] * e_down[b][lam];
          acc += e_up[a][sigma] * cov;
        }
        omega[a][nu][b] = acc;
      }
  return omega;
}

Rank3 spin_connection_closed_form(const NewtonianMetric& m, double x) {
  Rank3 omega{};
  const double w = m.g() / m.lapse(x);
  omega[0][kT][1] = w;
  omega[1][kT][0] = w;
  return omega;
}

double FrameVelocity::u0() const { return std::sqrt(1.0 + speed_squared()); }

Vec4 to_coordinate(const NewtonianMetric& m, double x, const Vec4& frame_vector) {
  const Mat4 e = inverse_tetrad(m, x);
  Vec4 out{};
  for (int mu = 0; mu < 4; ++mu)
    for (int a = 0; a < 4; ++a) out[mu] += e[a][mu] * frame_vector[a];
  return out;
}

Vec4 to_frame(const NewtonianMetric& m, double x, const Vec4& coordinate_vector) {
  const Mat4 e = tetrad(m, x);
  Vec4 out{};
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu) out[a] += e[a][mu] * coordinate_vector[mu];
  return out;
}

Vec4 four_acceleration(const NewtonianMetric& m, double x, const FrameVelocity& v) {
  const double n2 = m.lapse_squared(x);
  const double e = v.u0();
  return {m.g() * v.ux * e / n2, m.g() * e * e / n2, 0.0, 0.0};
}

Mat4 LltGenerator::lowered() const {
  Mat4 out{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out[a][b] = kMinkowski[a][a] * mixed_[a][b];
  return out;
}

double LltGenerator::antisymmetry_defect() const {
  const Mat4 low = lowered();
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) worst = std::max(worst, std::abs(low[a][b] + low[b][a]));
  return worst;
}

LltGenerator llt_generator(const NewtonianMetric& m, double x, const FrameVelocity& v) {
  const Vec4 u_up = v.frame();
  const Vec4 a_up = four_acceleration(m, x, v);
  const Vec4 u_coord = to_coordinate(m, x, u_up);
  const Rank3 omega = spin_connection(m, x);

  Mat4 lambda{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const double a_low = kMinkowski[b][b] * a_up[b];
      const double u_low = kMinkowski[b][b] * u_up[b];
      double transport = 0.0;
      for (int nu = 0; nu < 4; ++nu) transport += u_coord[nu] * omega[a][nu][b];
      lambda[a][b] = u_up[a] * a_low - a_up[a] * u_low - transport;
    }
  return LltGenerator(lambda);
}

LltClosedForm llt_closed_form(const NewtonianMetric& m, double x, const FrameVelocity& v) {
  const double n2 = m.lapse_squared(x);
  const double p2 = v.speed_squared();
  const double e = std::sqrt(1.0 + p2);
  return {m.g() * e * (p2 - v.ux * v.ux) / n2,
          -m.g() * v.ux * v.uz * e / n2,
          -m.g() * v.uz * (1.0 + p2) / n2};
}

std::array<double, 3> WignerGenerator::axial() const {
  // w_1 = (th_23 - th_32)/2, w_2 = (th_31 - th_13)/2, w_3 = (th_12 - th_21)/2
  return {0.5 * (c_[1][2] - c_[2][1]), 0.5 * (c_[2][0] - c_[0][2]), 0.5 * (c_[0][1] - c_[1][0])};
}

WignerGenerator wigner_generator(const NewtonianMetric& m, double x, const FrameVelocity& v) {
  const LltGenerator lambda = llt_generator(m, x, v);
  const Vec4 p = v.frame();
  Mat3 theta{};
  for (int i = 1; i < 4; ++i)
    for (int j = 1; j < 4; ++j) {
      // Spatial indices are raised and lowered with +1; lambda_{j0} = lambda^j_0.
      const double lambda_j0 = lambda(j, 0);
      theta[i - 1][j - 1] = lambda(i, j) + (lambda(i, 0) * p[j] - lambda_j0 * p[i]) / (p[0] + 1.0);
    }
  return WignerGenerator(theta);
}

double wigner_generator_13_closed_form(const NewtonianMetric& m, double x, const FrameVelocity& v) {
  if (v.ux != 0.0 && v.uz != 0.0) {
    throw InvalidInput("closed-form Wigner generator needs an axis-aligned velocity");
  }
  if (v.uz == 0.0) return 0.0;
  return -m.g() * v.uz * std::sqrt(v.uz * v.uz + 1.0) / m.lapse_squared(x);
}

double proper_time_rate(const NewtonianMetric& m, double x, double speed) {
  if (!(speed >= 0.0 && speed < 1.0)) {
    throw DomainError("speed must lie in [0, 1) in units of c");
  }
  const double arg = m.lapse_squared(x) - speed * speed;
  if (!(arg > 0.0)) throw DomainError("world line is not timelike at height " + std::to_string(x));
  return std::sqrt(arg);
}

}  // namespace ccrsim::wigner
