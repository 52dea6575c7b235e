#include <cmath>
#include <limits>
#include <random>

#include "ccrsim/errors.hpp"
#include "ccrsim/wigner/frame.hpp"
#include "ccrsim/wigner/units.hpp"
#include "doctest.h"

using namespace ccrsim::wigner;

namespace {

// g/c^2 = 0.1 per metre: strong enough that finite differences resolve the
// metric, and 1 + 2gx stays positive for x > -5.
constexpr double kStrongG = 0.1 * kSpeedOfLight * kSpeedOfLight;

double rel(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

struct Sampler {
  std::mt19937_64 rng{42};
  double height() { return std::uniform_real_distribution<double>(-2.0, 50.0)(rng); }
  double component() { return std::uniform_real_distribution<double>(-0.9, 0.9)(rng); }
  FrameVelocity velocity() { return {component(), component()}; }
};

}  // namespace

TEST_CASE("metric validation") {
  CHECK_THROWS_AS(NewtonianMetric(-1.0), ccrsim::InvalidInput);
  CHECK_THROWS_AS(NewtonianMetric{std::numeric_limits<double>::infinity()}, ccrsim::InvalidInput);
  const NewtonianMetric strong(kStrongG);
  CHECK(strong.g() == doctest::Approx(0.1));
  CHECK_THROWS_AS(strong.lapse(-5.0), ccrsim::DomainError);
  CHECK_THROWS_AS(tetrad(strong, -6.0), ccrsim::DomainError);
}

TEST_CASE("tetrad") {
  const auto flat = tetrad(NewtonianMetric(0.0), 123.0);
  const auto origin = tetrad(NewtonianMetric(10.0), 0.0);
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu) {
      CHECK(flat[a][mu] == (a == mu ? 1.0 : 0.0));
      CHECK(origin[a][mu] == (a == mu ? 1.0 : 0.0));
    }
  // sqrt(1 + 2*10*1/9e16) = 1 + 1.11e-16
  CHECK(std::abs(tetrad(NewtonianMetric(10.0), 1.0)[0][0] - (1.0 + 1.1111111111111111e-16)) < 2.3e-16);
  CHECK(std::abs(NewtonianMetric(10.0).lapse_squared(1.0) - 1.0 - 2.2222222222222222e-16) < 1e-18);
}

TEST_CASE("tetrad orthonormality at random heights") {
  Sampler s;
  for (double g_si : {10.0, kStrongG}) {
    const NewtonianMetric m(g_si);
    for (int trial = 0; trial < 100; ++trial) {
      const double x = s.height();
      const auto metric = m.components(x);
      const auto inv = inverse_tetrad(m, x);
      const auto e = tetrad(m, x);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          double eta = 0.0, delta = 0.0;
          for (int mu = 0; mu < 4; ++mu) {
            delta += e[a][mu] * inv[b][mu];
            for (int nu = 0; nu < 4; ++nu) eta += metric[mu][nu] * inv[a][mu] * inv[b][nu];
          }
          CHECK(std::abs(eta - kMinkowski[a][b]) < 1e-12);
          CHECK(std::abs(delta - (a == b ? 1.0 : 0.0)) < 1e-12);
        }
    }
  }
}

TEST_CASE("christoffel symbols") {
  const auto flat = christoffel(NewtonianMetric(0.0), 3.0);
  for (const auto& m : flat)
    for (const auto& row : m)
      for (double v : row) CHECK(v == 0.0);

  const NewtonianMetric earth(10.0);
  CHECK(christoffel(earth, 0.0)[0][0][1] == earth.g());

  SUBCASE("finite differences of the metric reproduce them") {
    const NewtonianMetric m(kStrongG);
    Sampler s;
    for (int trial = 0; trial < 20; ++trial) {
      const double x = s.height(), h = 1e-5;
      const auto up = m.components(x + h), down = m.components(x - h);
      const auto inv = m.inverse_components(x);
      // d_rho g_{mu nu}: only rho = x is non-zero.
      auto dg = [&](int rho, int mu, int nu) { return rho == 1 ? (up[mu][nu] - down[mu][nu]) / (2 * h) : 0.0; };
      const auto gamma = christoffel(m, x);
      for (int sg = 0; sg < 4; ++sg)
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu) {
            double ref = 0.0;
            for (int rho = 0; rho < 4; ++rho)
              ref += 0.5 * inv[sg][rho] * (dg(mu, rho, nu) + dg(nu, rho, mu) - dg(rho, mu, nu));
            if (ref == 0.0) {
              CHECK(gamma[sg][mu][nu] == 0.0);
            } else {
              CHECK(rel(gamma[sg][mu][nu], ref) < 1e-6);
            }
          }
    }
  }
}

TEST_CASE("spin connection") {
  for (const auto& row : spin_connection(NewtonianMetric(0.0), 2.0))
    for (const auto& r : row)
      for (double v : r) CHECK(v == 0.0);

  const NewtonianMetric earth(10.0);
  const auto at_origin = spin_connection_closed_form(earth, 0.0);
  CHECK(at_origin[0][0][1] == earth.g());
  CHECK(at_origin[1][0][0] == earth.g());
  // No x-component: the frame is static and the connection only sees time.
  CHECK(at_origin[0][1][1] == 0.0);

  Sampler s;
  for (double g_si : {10.0, kStrongG}) {
    const NewtonianMetric m(g_si);
    for (int trial = 0; trial < 100; ++trial) {
      const double x = s.height();
      const auto assembled = spin_connection(m, x);
      const auto closed = spin_connection_closed_form(m, x);
      for (int a = 0; a < 4; ++a)
        for (int nu = 0; nu < 4; ++nu)
          for (int b = 0; b < 4; ++b) {
            CHECK(std::abs(assembled[a][nu][b] - closed[a][nu][b]) < 1e-12 * std::max(1.0, m.g()));
            // omega_{a nu b} = -omega_{b nu a} after lowering with eta.
            const double lower_ab = kMinkowski[a][a] * assembled[a][nu][b];
            const double lower_ba = kMinkowski[b][b] * assembled[b][nu][a];
            CHECK(std::abs(lower_ab + lower_ba) < 1e-12);
          }
    }
  }
}

TEST_CASE("frame and coordinate vectors") {
  const NewtonianMetric m(kStrongG);
  const FrameVelocity v{0.3, -0.2};
  CHECK(v.u0() == doctest::Approx(std::sqrt(1.13)));
  const auto coord = to_coordinate(m, 2.0, v.frame());
  CHECK(coord[0] == doctest::Approx(v.u0() / std::sqrt(1.4)));
  const auto back = to_frame(m, 2.0, coord);
  for (int a = 0; a < 4; ++a) CHECK(std::abs(back[a] - v.frame()[a]) < 1e-15);
}

TEST_CASE("four acceleration") {
  const NewtonianMetric m(kStrongG);
  const auto horizontal = four_acceleration(m, 1.0, {0.0, 0.4});
  CHECK(horizontal[0] == 0.0);
  CHECK(rel(horizontal[1], 0.1 * 1.16 / 1.2) < 1e-15);

  const auto flat = four_acceleration(NewtonianMetric(0.0), 1.0, {0.3, 0.4});
  for (double c : flat) CHECK(c == 0.0);

  Sampler s;
  for (int trial = 0; trial < 200; ++trial) {
    const double x = s.height();
    const FrameVelocity v = s.velocity();
    const double n = std::sqrt(1.0 + 2.0 * 0.1 * x);
    const double e = std::sqrt(1.0 + v.speed_squared());
    // a^mu = du^mu/dtau + Gamma^mu_{nu lambda} u^nu u^lambda along u^mu = (E/N, ux, 0, uz):
    // a^t = -g E ux/N^3 + 2 (g/N^2)(E/N) ux, a^x = g (E/N)^2.
    const Vec4 ref_coord{0.1 * e * v.ux / (n * n * n), 0.1 * e * e / (n * n), 0.0, 0.0};
    const auto a_coord = to_coordinate(m, x, four_acceleration(m, x, v));
    for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(a_coord[mu] - ref_coord[mu]) < 1e-12);

    // g_{mu nu} a^mu u^nu = 0
    const auto metric = m.components(x);
    const auto u_coord = to_coordinate(m, x, v.frame());
    double dot = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) dot += metric[mu][nu] * a_coord[mu] * u_coord[nu];
    CHECK(std::abs(dot) < 1e-12);
  }
}

TEST_CASE("infinitesimal local Lorentz transformation") {
  for (const auto& row : llt_generator(NewtonianMetric(0.0), 1.0, {0.2, 0.3}).mixed())
    for (double v : row) CHECK(v == 0.0);

  // Motion along z only.
  const NewtonianMetric earth(10.0);
  const FrameVelocity along_z{0.0, 0.1};
  const double expected13 = -earth.g() * 0.1 * 1.01 / earth.lapse_squared(3.0);
  CHECK(rel(llt_generator(earth, 3.0, along_z)(1, 3), expected13) < 1e-10);

  Sampler s;
  for (double g_si : {10.0, kStrongG}) {
    const NewtonianMetric m(g_si);
    for (int trial = 0; trial < 200; ++trial) {
      const double x = s.height();
      const FrameVelocity v = s.velocity();
      const auto lambda = llt_generator(m, x, v);
      CHECK(lambda.antisymmetry_defect() < 1e-12 * std::max(1.0, m.g()));

      const auto closed = llt_closed_form(m, x, v);
      CHECK(rel(lambda(0, 1), closed.l01) < 1e-10);
      CHECK(rel(lambda(0, 3), closed.l03) < 1e-10);
      CHECK(rel(lambda(1, 3), closed.l13) < 1e-10);
      CHECK(lambda(0, 2) == 0.0);
      CHECK(lambda(1, 2) == 0.0);
      CHECK(lambda(2, 3) == 0.0);
    }
  }
}

TEST_CASE("Wigner rotation generator") {
  for (const auto& row : wigner_generator(NewtonianMetric(0.0), 1.0, {0.0, 0.3}).components())
    for (double v : row) CHECK(v == 0.0);

  Sampler s;
  for (double g_si : {10.0, kStrongG}) {
    const NewtonianMetric m(g_si);
    for (int trial = 0; trial < 200; ++trial) {
      const double x = s.height(), p = s.component();

      // Moving vertically: nothing rotates.
      const auto vertical = wigner_generator(m, x, {p, 0.0});
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(std::abs(vertical(i, j)) < 1e-12 * m.g());
      CHECK(wigner_generator_13_closed_form(m, x, {p, 0.0}) == 0.0);

      // Moving horizontally: only theta^1_3 = -theta^3_1.
      const auto horizontal = wigner_generator(m, x, {0.0, p});
      const double closed = wigner_generator_13_closed_form(m, x, {0.0, p});
      CHECK(rel(horizontal(1, 3), closed) < 1e-10);
      CHECK(rel(horizontal(3, 1), -closed) < 1e-10);
      CHECK(std::abs(horizontal(1, 2)) + std::abs(horizontal(2, 3)) == 0.0);
      const auto w = horizontal.axial();
      CHECK(w[0] == 0.0);
      CHECK(w[2] == 0.0);
      CHECK(rel(w[1], -closed) < 1e-10);
    }
  }
  CHECK_THROWS_AS(wigner_generator_13_closed_form(NewtonianMetric(10.0), 0.0, {0.1, 0.1}), ccrsim::InvalidInput);
}

TEST_CASE("proper time rate") {
  CHECK(proper_time_rate(NewtonianMetric(0.0), 5.0, 0.0) == 1.0);
  CHECK(proper_time_rate(NewtonianMetric(0.0), 5.0, 0.6) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(std::abs(proper_time_rate(NewtonianMetric(10.0), 1.0, 0.0) - (1.0 + 1.1111111111111111e-16)) < 2.3e-16);
  CHECK_THROWS_AS(proper_time_rate(NewtonianMetric(0.0), 0.0, 1.0), ccrsim::DomainError);
  CHECK_THROWS_AS(proper_time_rate(NewtonianMetric(kStrongG), -4.99, 0.5), ccrsim::DomainError);
}
