#include "ccrsim/qcore/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ccrsim/errors.hpp"

namespace ccrsim::qcore {

namespace {

constexpr double kUnitIntervalSlack = 1e-12;
// Eigenvalues of sigma at or below this count as its kernel.
constexpr double kKernelThreshold = 1e-14;
// Weight of rho allowed on sigma's kernel before the divergence is reported.
constexpr double kSupportTolerance = 1e-10;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double clamp_eigenvalue(double v) {
  if (v < -kNegativeEigenvalueTolerance) {
    throw NumericalError("negative eigenvalue " + format_value(v) + " beyond tolerance");
  }
  return v < 0.0 ? 0.0 : v;
}

}  // namespace

double binary_entropy(double u) {
  if (!(u >= -kUnitIntervalSlack && u <= 1.0 + kUnitIntervalSlack)) {
    throw InvalidInput("binary_entropy: argument " + format_value(u) + " outside [0, 1]");
  }
  u = std::clamp(u, 0.0, 1.0);
  return -xlog2x(u) - xlog2x(1.0 - u);
}

double spectral_entropy(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double v : eigenvalues) s -= xlog2x(clamp_eigenvalue(v));
  // -0.0 reads badly in CSV output.
  return s == 0.0 ? 0.0 : s;
}

double vn_entropy(const DensityOperator& rho) {
  const auto ev = eigenvalues_hermitian(rho.matrix());
  return spectral_entropy(ev);
}

DensityOperator dephase_z(const DensityOperator& rho) {
  const std::size_t n = rho.dim();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = rho(i, i).real();
  return DensityOperator(ComplexMatrix(n, std::move(e)),
                         std::vector<Factor>(rho.labels().begin(), rho.labels().end()));
}

double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma) {
  if (rho.dim() != sigma.dim()) throw InvalidInput("relative_entropy: dimension mismatch");
  const std::size_t n = rho.dim();

  const double neg_s_rho = -vn_entropy(rho);

  // Tr rho log2 sigma in sigma's eigenbasis.
  const auto sig = eigensystem_hermitian(sigma.matrix());
  double cross = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    // w_k = <v_k| rho |v_k>
    Complex w = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        w += std::conj(sig.vectors(r, k)) * rho(r, c) * sig.vectors(c, k);
    const double weight = w.real();
    const double mu = clamp_eigenvalue(sig.values[k]);
    if (mu <= kKernelThreshold) {
      if (weight > kSupportTolerance) {
        throw DivergenceError("relative_entropy: supp(rho) not contained in supp(sigma)");
      }
      continue;
    }
    cross += weight * std::log2(mu);
  }
  const double d = neg_s_rho - cross;
  return d == 0.0 ? 0.0 : d;
}

}  // namespace ccrsim::qcore
