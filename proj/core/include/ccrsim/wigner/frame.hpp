#pragma once

#include <array>

// Local reference frames for the weak, static, uniform field
//   ds^2 = -(1 + 2gx) dt^2 + dx^2 + dy^2 + dz^2,
// with x the height and z the horizontal direction. Indices 0..3 stand for
// t, x, y, z (coordinate) and 0, 1, 2, 3 (frame). The particle mass is 1, so
// momenta and four-velocities coincide.
namespace ccrsim::wigner {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<Vec4, 4>;
// rank3[a][mu][b]: one upper index followed by two lower ones.
using Rank3 = std::array<Mat4, 4>;
using Mat3 = std::array<std::array<double, 3>, 3>;

inline constexpr Mat4 kMinkowski = {{{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};

class NewtonianMetric {
 public:
  // Throws InvalidInput if g is negative or not finite.
  explicit NewtonianMetric(double g_si);

  double g_si() const { return g_si_; }
  // g / c^2 in 1/m.
  double g() const { return g_; }

  // 1 + 2gx; throws DomainError if it is not positive.
  double lapse_squared(double x) const;
  double lapse(double x) const;

  // g_{mu nu} and g^{mu nu}.
  Mat4 components(double x) const;
  Mat4 inverse_components(double x) const;

 private:
  double g_si_;
  double g_;
};

// e^a_mu, indexed [a][mu]: the static frame aligned with t, x, y, z.
Mat4 tetrad(const NewtonianMetric& m, double x);
// e_a^mu, indexed [a][mu].
Mat4 inverse_tetrad(const NewtonianMetric& m, double x);
// d/dx of e_a^mu; the only coordinate the frame depends on.
Mat4 inverse_tetrad_gradient(const NewtonianMetric& m, double x);

// Gamma^sigma_{mu nu}, indexed [sigma][mu][nu]. Non-zero entries:
// Gamma^x_tt = g and Gamma^t_tx = Gamma^t_xt = g/(1 + 2gx).
Rank3 christoffel(const NewtonianMetric& m, double x);

// omega^a_{nu b} = e^a_sigma (d_nu e_b^sigma + Gamma^sigma_{nu lambda} e_b^lambda),
// assembled from the Christoffel symbols and the frame field.
Rank3 spin_connection(const NewtonianMetric& m, double x);

// The same object written out: omega^0_{t1} = omega^1_{t0} = g/sqrt(1 + 2gx),
// everything else zero.
Rank3 spin_connection_closed_form(const NewtonianMetric& m, double x);

// Spatial frame components of the four-velocity; motion stays in the xz plane.
struct FrameVelocity {
  double ux = 0.0;
  double uz = 0.0;

  double speed_squared() const { return ux * ux + uz * uz; }
  double u0() const;  // sqrt(1 + u^2)
  Vec4 frame() const { return {u0(), ux, 0.0, uz}; }
};

// v^mu = e_a^mu v^a.
Vec4 to_coordinate(const NewtonianMetric& m, double x, const Vec4& frame_vector);
// v^a = e^a_mu v^mu.
Vec4 to_frame(const NewtonianMetric& m, double x, const Vec4& coordinate_vector);

// Frame components of the four-acceleration needed to hold the particle on a
// path of constant frame velocity:
//   a^0 = g ux sqrt(1 + u^2)/(1 + 2gx),  a^1 = g (1 + u^2)/(1 + 2gx).
Vec4 four_acceleration(const NewtonianMetric& m, double x, const FrameVelocity& v);

// Infinitesimal local Lorentz transformation lambda^a_b, indexed [a][b].
class LltGenerator {
 public:
  explicit LltGenerator(const Mat4& mixed) : mixed_(mixed) {}

  double operator()(int a, int b) const { return mixed_[a][b]; }
  const Mat4& mixed() const { return mixed_; }
  // lambda_{ab} = eta_{ac} lambda^c_b
  Mat4 lowered() const;
  // Largest |lambda_{ab} + lambda_{ba}|.
  double antisymmetry_defect() const;

 private:
  Mat4 mixed_;
};

// lambda^a_b = u^a a_b - a^a u_b - u^nu omega^a_{nu b}.
LltGenerator llt_generator(const NewtonianMetric& m, double x, const FrameVelocity& v);

struct LltClosedForm {
  double l01;  // g sqrt(1 + p^2)(p^2 - px^2)/(1 + 2gx)
  double l03;  // -g px pz sqrt(1 + p^2)/(1 + 2gx)
  double l13;  // -g pz (1 + p^2)/(1 + 2gx)
};
LltClosedForm llt_closed_form(const NewtonianMetric& m, double x, const FrameVelocity& v);

// Wigner rotation generator theta^i_j, indexed [i-1][j-1].
class WignerGenerator {
 public:
  explicit WignerGenerator(const Mat3& components) : c_(components) {}

  double operator()(int i, int j) const { return c_[i - 1][j - 1]; }
  const Mat3& components() const { return c_; }
  // Axial vector w_k = (1/2) eps_ijk theta_ij, so the spin-1/2 step is
  // I + (i/2) w.sigma dtau.
  std::array<double, 3> axial() const;

 private:
  Mat3 c_;
};

// theta^i_j = lambda^i_j + (lambda^i_0 p_j - lambda_{j0} p^i)/(p^0 + 1).
WignerGenerator wigner_generator(const NewtonianMetric& m, double x, const FrameVelocity& v);

// theta^1_3 on an axis-aligned segment: -g pz sqrt(pz^2 + 1)/(1 + 2gx) when
// px = 0, zero when pz = 0. Throws InvalidInput for oblique velocities.
double wigner_generator_13_closed_form(const NewtonianMetric& m, double x, const FrameVelocity& v);

// dtau/dt = sqrt((1 + 2gx) - v^2) for coordinate speed v (fraction of c).
// Throws DomainError when the argument of the root is not positive.
double proper_time_rate(const NewtonianMetric& m, double x, double speed);

}  // namespace ccrsim::wigner
