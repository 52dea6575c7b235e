#pragma once

#include "ccrsim/qcore/state.hpp"

// Entropic quantities, all in bits (log base 2, with 0 log 0 = 0).
namespace ccrsim::qcore {

// h(u) = -u log2 u - (1-u) log2 (1-u). Throws InvalidInput for u outside
// [0, 1] by more than 1e-12; inputs within that slack are clamped.
double binary_entropy(double u);

// Shannon entropy of a spectrum. Eigenvalues in [-1e-10, 0) count as zero;
// anything more negative throws NumericalError.
double spectral_entropy(std::span<const double> eigenvalues);

// S(rho) = -Tr rho log2 rho.
double vn_entropy(const DensityOperator& rho);

// Non-selective measurement in the computational basis: keeps the diagonal.
DensityOperator dephase_z(const DensityOperator& rho);

// S(rho || sigma) = Tr rho (log2 rho - log2 sigma). Throws DivergenceError
// when rho has weight on the kernel of sigma.
double relative_entropy(const DensityOperator& rho, const DensityOperator& sigma);

}  // namespace ccrsim::qcore
