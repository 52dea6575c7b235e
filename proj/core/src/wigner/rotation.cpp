#include "ccrsim/wigner/rotation.hpp"

#include <algorithm>
#include <cmath>

namespace ccrsim::wigner {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Su2 Su2::identity() {
  Su2 u;
  u.m_[0][0] = 1.0;
  u.m_[1][1] = 1.0;
  return u;
}

Su2 Su2::from_generator(const std::array<double, 3>& w, double dtau) {
  const double norm = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
  const double half = 0.5 * norm * dtau;
  if (norm == 0.0 || half == 0.0) return identity();
  const double c = std::cos(half);
  const double s = std::sin(half);
  const double nx = w[0] / norm, ny = w[1] / norm, nz = w[2] / norm;
  // cos(half) I + i sin(half) n.sigma
  Su2 u;
  u.m_[0][0] = Complex(c, s * nz);
  u.m_[0][1] = kI * s * Complex(nx, -ny);
  u.m_[1][0] = kI * s * Complex(nx, ny);
  u.m_[1][1] = Complex(c, -s * nz);
  return u;
}

Su2 Su2::about_y(double angle) {
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  Su2 u;
  u.m_[0][0] = c;
  u.m_[0][1] = -s;
  u.m_[1][0] = s;
  u.m_[1][1] = c;
  return u;
}

Spinor Su2::apply(const Spinor& s) const {
  return {m_[0][0] * s[0] + m_[0][1] * s[1], m_[1][0] * s[0] + m_[1][1] * s[1]};
}

Complex Su2::determinant() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }

double Su2::unitarity_defect() const {
  double worst = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      Complex acc = 0.0;
      for (int k = 0; k < 2; ++k) acc += std::conj(m_[k][r]) * m_[k][c];
      worst = std::max(worst, std::abs(acc - (r == c ? 1.0 : 0.0)));
    }
  return worst;
}

double Su2::y_angle() const { return 2.0 * std::atan2(m_[1][0].real(), m_[0][0].real()); }

Su2 operator*(const Su2& a, const Su2& b) {
  Su2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.m_[r][c] = a.m_[r][0] * b.m_[0][c] + a.m_[r][1] * b.m_[1][c];
  return out;
}

Spinor BlochSpinState::spinor() const {
  return {std::cos(0.5 * theta), std::polar(1.0, phi) * std::sin(0.5 * theta)};
}

double BlochSpinState::bloch_y() const { return std::sin(theta) * std::sin(phi); }

bool BlochSpinState::in_xz_plane() const { return std::abs(bloch_y()) <= 1e-12; }

Spinor rotate_spin(const BlochSpinState& tau, double angle) { return Su2::about_y(angle).apply(tau.spinor()); }

interferometer::SpinOverlap spin_overlap_from_thetas(double theta0, double theta1, const BlochSpinState& tau) {
  const Spinor a = rotate_spin(tau, theta0);
  const Spinor b = rotate_spin(tau, theta1);
  return interferometer::SpinOverlap(std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1]);
}

interferometer::SpinPair spin_pair_from_thetas(double theta0, double theta1, const BlochSpinState& tau) {
  return interferometer::SpinPair(rotate_spin(tau, theta0), rotate_spin(tau, theta1));
}

}  // namespace ccrsim::wigner
