#pragma once

#include <array>

#include "ccrsim/interferometer.hpp"

namespace ccrsim::wigner {

using interferometer::Complex;
using interferometer::Spinor;

// 2x2 special unitary matrix acting on spin-1/2 states.
class Su2 {
 public:
  static Su2 identity();
  // exp((i/2) w.sigma dtau), the spin-1/2 image of a rotation generated by w.
  static Su2 from_generator(const std::array<double, 3>& w, double dtau);
  // exp(-i sigma_y angle/2).
  static Su2 about_y(double angle);

  const Complex& operator()(int r, int c) const { return m_[r][c]; }
  Spinor apply(const Spinor& s) const;
  Complex determinant() const;
  // Largest entry of |U^dagger U - I|.
  double unitarity_defect() const;
  // Angle of a pure y rotation, exp(-i sigma_y angle/2) -> angle, in (-2pi, 2pi].
  double y_angle() const;

  friend Su2 operator*(const Su2& a, const Su2& b);

 private:
  std::array<std::array<Complex, 2>, 2> m_{};
};

// Spin direction on the Bloch sphere.
struct BlochSpinState {
  double theta = 0.0;  // polar angle
  double phi = 0.0;    // azimuth

  // cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>
  Spinor spinor() const;
  // True when the Bloch vector has no y component (within 1e-12).
  bool in_xz_plane() const;
  double bloch_y() const;
};

// exp(-i sigma_y angle/2) |tau>.
Spinor rotate_spin(const BlochSpinState& tau, double angle);

// <tau0|tau1> with tau_eta = exp(-i sigma_y Theta_eta/2)|tau>. For tau in the
// xz plane this is cos((Theta1 - Theta0)/2).
interferometer::SpinOverlap spin_overlap_from_thetas(double theta0, double theta1, const BlochSpinState& tau);

// The two rotated spin states, ready for the interferometer builders.
interferometer::SpinPair spin_pair_from_thetas(double theta0, double theta1, const BlochSpinState& tau);

}  // namespace ccrsim::wigner
