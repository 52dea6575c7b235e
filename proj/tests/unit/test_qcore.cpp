#include <cmath>
#include <numbers>
#include <random>

#include "ccrsim/errors.hpp"
#include "ccrsim/qcore/entropy.hpp"
#include "ccrsim/qcore/state.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ccrsim::qcore;
using ccrsim::InvalidInput;

namespace {

// Frozen from a 50-digit evaluation (see oracle::binary_entropy for the formula).
constexpr double kH025 = 0.81127812445913286;     // h(1/4)
constexpr double kHPlus = 0.60087603669285610;    // h((1 + sqrt(1/2))/2)
constexpr double kEigPlus = 0.85355339059327376;  // (1 + sqrt(1/2))/2

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

DensityOperator qubit_density(Complex a, Complex b, Complex c, Complex d) {
  return DensityOperator(ComplexMatrix(2, {a, b, c, d}), {Factor::kPath});
}

// Reduced path matrix at alpha = pi/4 for the QCRE without Wigner rotations.
DensityOperator qcre_quarter_pi() { return qubit_density(0.75, 0.25, 0.25, 0.25); }

}  // namespace

TEST_CASE("tensor_product builds Kronecker products") {
  const auto zz = tensor_product(PureState::basis(Factor::kPath, 0), PureState::basis(Factor::kSpin, 0));
  CHECK(zz.dim() == 4);
  CHECK(zz.amplitudes()[0] == Complex(1.0));
  for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(zz.amplitudes()[i]) == 0.0);

  const auto sep = tensor_product(PureState::qubit(Factor::kPath, 1.0, 0.0),
                                  PureState::qubit(Factor::kSpin, kInvSqrt2, kInvSqrt2));
  CHECK(std::abs(sep.amplitudes()[0] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(sep.amplitudes()[1] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(sep.amplitudes()[2]) == 0.0);
  CHECK(std::abs(sep.amplitudes()[3]) == 0.0);
  CHECK(sep.labels()[0] == Factor::kPath);
  CHECK(sep.labels()[1] == Factor::kSpin);
}

TEST_CASE("tensor_product assembles the relativistic input state |0>|tau>|BS>") {
  const Complex c = std::cos(0.3), s = std::sin(0.3);
  const auto psi = tensor_product(tensor_product(PureState::basis(Factor::kPath, 0),
                                                 PureState::qubit(Factor::kSpin, c, s)),
                                  PureState::qubit(Factor::kBs, kInvSqrt2, kInvSqrt2));
  REQUIRE(psi.dim() == 8);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-15);
  // index = path*4 + spin*2 + bs
  CHECK(std::abs(psi.amplitudes()[0] - c * kInvSqrt2) < 1e-15);
  CHECK(std::abs(psi.amplitudes()[1] - c * kInvSqrt2) < 1e-15);
  CHECK(std::abs(psi.amplitudes()[2] - s * kInvSqrt2) < 1e-15);
  CHECK(std::abs(psi.amplitudes()[3] - s * kInvSqrt2) < 1e-15);
  for (std::size_t i = 4; i < 8; ++i) CHECK(std::abs(psi.amplitudes()[i]) == 0.0);
}

TEST_CASE("tensor_product rejects overlapping labels") {
  CHECK_THROWS_AS(tensor_product(PureState::basis(Factor::kSpin, 0), PureState::basis(Factor::kSpin, 1)),
                  InvalidInput);
}

TEST_CASE("PureState validates its invariants") {
  CHECK_THROWS_AS(PureState({Factor::kPath}, {1.0, 1.0}), InvalidInput);
  CHECK_THROWS_AS(PureState({Factor::kPath}, {1.0, 0.0, 0.0}), InvalidInput);
  CHECK_THROWS_AS(PureState({Factor::kPath, Factor::kPath}, {1.0, 0.0, 0.0, 0.0}), InvalidInput);
  CHECK_THROWS_AS(PureState::normalized({Factor::kPath}, {0.0, 0.0}), InvalidInput);
  CHECK_NOTHROW(PureState::normalized({Factor::kPath}, {3.0, 4.0}));
}

TEST_CASE("density_from_pure") {
  const auto zero = density_from_pure(PureState::basis(Factor::kPath, 0));
  CHECK(zero(0, 0) == Complex(1.0));
  CHECK(std::abs(zero(1, 1)) == 0.0);
  CHECK(std::abs(zero(0, 1)) == 0.0);

  const auto plus = density_from_pure(PureState::qubit(Factor::kPath, kInvSqrt2, kInvSqrt2));
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(std::abs(plus(r, c) - 0.5) < 1e-15);

  // (|0> + e^{i phi}|1>)/sqrt2: off-diagonal modulus 1/2 for any phase.
  const double phi = 0.7;
  const auto shifted = density_from_pure(
      PureState::qubit(Factor::kPath, kInvSqrt2, std::polar(kInvSqrt2, phi)));
  CHECK(std::abs(std::abs(shifted(0, 1)) - 0.5) < 1e-15);
  CHECK(std::abs(shifted(1, 0) - std::polar(0.5, phi)) < 1e-15);
}

TEST_CASE("partial_trace") {
  SUBCASE("product state keeps the first factor") {
    const auto rho = density_from_pure(
        tensor_product(PureState::basis(Factor::kPath, 0), PureState::basis(Factor::kSpin, 1)));
    const auto red = partial_trace(rho, {Factor::kPath});
    CHECK(red.dim() == 2);
    CHECK(std::abs(red(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(red(1, 1)) < 1e-15);
    const auto spin = partial_trace(rho, {Factor::kSpin});
    CHECK(std::abs(spin(1, 1) - 1.0) < 1e-15);
  }
  SUBCASE("Bell state reduces to I/2") {
    const auto bell = density_from_pure(
        PureState({Factor::kPath, Factor::kSpin}, {kInvSqrt2, 0.0, 0.0, kInvSqrt2}));
    for (auto keep : {Factor::kPath, Factor::kSpin}) {
      const auto red = partial_trace(bell, {keep});
      CHECK(std::abs(red(0, 0) - 0.5) < 1e-15);
      CHECK(std::abs(red(1, 1) - 0.5) < 1e-15);
      CHECK(std::abs(red(0, 1)) < 1e-15);
    }
  }
  SUBCASE("QCRE state at alpha = pi/4, unit overlap") {
    const auto amps = oracle::qcre_amplitudes(std::numbers::pi / 4, 0.0, {1.0, 0.0}, {1.0, 0.0});
    std::vector<Complex> flat;
    for (int p = 0; p < 2; ++p)
      for (int s = 0; s < 2; ++s)
        for (int b = 0; b < 2; ++b) flat.push_back(amps[p][s][b]);
    const auto rho = density_from_pure(PureState({Factor::kPath, Factor::kSpin, Factor::kBs}, flat));
    const auto red = partial_trace(rho, {Factor::kPath});
    CHECK(std::abs(red(0, 0) - 0.75) < 1e-12);
    CHECK(std::abs(red(1, 1) - 0.25) < 1e-12);
    CHECK(std::abs(std::abs(red(0, 1)) - 0.25) < 1e-12);
  }
  SUBCASE("errors") {
    const auto rho = density_from_pure(PureState::basis(Factor::kPath, 0));
    CHECK_THROWS_AS(partial_trace(rho, {Factor::kBs}), InvalidInput);
    CHECK_THROWS_AS(partial_trace(rho, std::span<const Factor>{}), InvalidInput);
    const DensityOperator unlabeled(ComplexMatrix::identity(2) - ComplexMatrix::diagonal(std::vector{0.5, 0.5}));
    CHECK_THROWS_AS(partial_trace(unlabeled, {Factor::kPath}), InvalidInput);
  }
}

TEST_CASE("eigenvalues_hermitian") {
  const auto d = eigenvalues_hermitian(ComplexMatrix::diagonal(std::vector{0.3, 0.7}));
  CHECK(d[0] == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(d[1] == doctest::Approx(0.3).epsilon(1e-15));

  const auto m = eigenvalues_hermitian(qcre_quarter_pi().matrix());
  const auto ref = oracle::eigenvalues({{{0.75, 0.25}, {0.25, 0.25}}});
  CHECK(std::abs(m[0] - ref[0]) < 1e-14);
  CHECK(std::abs(m[1] - ref[1]) < 1e-14);
  CHECK(std::abs(m[0] - kEigPlus) < 1e-14);

  const auto half = eigenvalues_hermitian(ComplexMatrix::diagonal(std::vector{0.5, 0.5}));
  CHECK(half[0] == doctest::Approx(0.5));
  CHECK(half[1] == doctest::Approx(0.5));

  CHECK_THROWS_AS(eigenvalues_hermitian(ComplexMatrix(2, {1.0, 0.3, 0.0, 0.0})), InvalidInput);
}

TEST_CASE("binary_entropy") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(std::abs(binary_entropy(0.25) - kH025) < 1e-15);
  CHECK(std::abs(binary_entropy(0.25) - binary_entropy(0.75)) < 1e-15);
  CHECK(binary_entropy(-1e-13) == 0.0);
  CHECK_THROWS_AS(binary_entropy(-1e-9), InvalidInput);
  CHECK_THROWS_AS(binary_entropy(1.1), InvalidInput);
}

TEST_CASE("vn_entropy") {
  CHECK(vn_entropy(density_from_pure(PureState::qubit(Factor::kPath, 0.6, 0.8))) == doctest::Approx(0.0));
  CHECK(vn_entropy(qubit_density(0.5, 0.0, 0.0, 0.5)) == doctest::Approx(1.0));
  CHECK(std::abs(vn_entropy(qcre_quarter_pi()) - kHPlus) < 1e-14);
  CHECK(std::abs(spectral_entropy(std::vector{kEigPlus, 1.0 - kEigPlus}) - kHPlus) < 1e-14);
  CHECK(spectral_entropy(std::vector{1.0, -5e-11}) == 0.0);
  CHECK_THROWS_AS(spectral_entropy(std::vector{1.0, -1e-8}), ccrsim::NumericalError);
}

TEST_CASE("dephase_z") {
  const auto diag = qubit_density(0.3, 0.0, 0.0, 0.7);
  CHECK(dephase_z(diag).matrix().max_abs_diff(diag.matrix()) == 0.0);

  const auto plus = qubit_density(0.5, 0.5, 0.5, 0.5);
  CHECK(dephase_z(plus).matrix().max_abs_diff(ComplexMatrix::diagonal(std::vector{0.5, 0.5})) == 0.0);

  CHECK(dephase_z(qcre_quarter_pi()).matrix().max_abs_diff(ComplexMatrix::diagonal(std::vector{0.75, 0.25})) ==
        0.0);
  CHECK(dephase_z(plus).labels().size() == 1);
}

TEST_CASE("relative_entropy") {
  const auto rho = qcre_quarter_pi();
  CHECK(std::abs(relative_entropy(rho, rho)) < 1e-14);
  CHECK(std::abs(relative_entropy(rho, dephase_z(rho)) - (kH025 - kHPlus)) < 1e-14);

  // sigma = |0><0| has no support where rho does.
  const auto zero = density_from_pure(PureState::basis(Factor::kPath, 0));
  CHECK_THROWS_AS(relative_entropy(rho, zero), ccrsim::DivergenceError);
  // The other direction is finite: supp |0><0| lies inside supp rho.
  CHECK(relative_entropy(zero, dephase_z(rho)) == doctest::Approx(-std::log2(0.75)));
}

TEST_CASE("random density operators: bounds, trace, spectrum, coherence identity") {
  std::mt19937_64 rng(20241015);
  for (int trial = 0; trial < 1000; ++trial) {
    // 8-dimensional pure state, reduced in several ways.
    const auto psi = PureState({Factor::kPath, Factor::kSpin, Factor::kBs}, oracle::random_state(rng, 8));
    const auto rho = density_from_pure(psi);
    for (const auto keep : {std::vector{Factor::kPath}, std::vector{Factor::kPath, Factor::kSpin},
                            std::vector{Factor::kBs}}) {
      const auto red = partial_trace(rho, keep);
      CHECK(std::abs(red.matrix().trace() - 1.0) < 1e-12);
      CHECK(red.matrix().hermiticity_defect() < 1e-12);

      const auto ev = eigenvalues_hermitian(red.matrix());
      double sum = 0.0;
      for (double v : ev) sum += v;
      CHECK(std::abs(sum - red.matrix().trace().real()) < 1e-10);

      const double s = vn_entropy(red);
      CHECK(s >= 0.0);
      CHECK(s <= std::log2(static_cast<double>(red.dim())) + 1e-12);

      const double lhs = relative_entropy(red, dephase_z(red));
      const double rhs = vn_entropy(dephase_z(red)) - vn_entropy(red);
      CHECK(std::abs(lhs - rhs) < 1e-10);
    }
  }
}
