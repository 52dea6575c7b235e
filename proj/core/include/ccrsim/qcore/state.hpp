#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ccrsim/qcore/matrix.hpp"

namespace ccrsim::qcore {

// Tensor factors that appear in the interferometer Hilbert spaces.
enum class Factor : std::uint8_t { kPath, kSpin, kBs };

std::string_view to_string(Factor f);

inline constexpr double kNormTolerance = 1e-12;

// Normalized amplitude vector over labeled qubit factors. The first label is
// the most significant index digit.
class PureState {
 public:
  // Throws InvalidInput on duplicate labels, a length that is not 2^labels,
  // non-finite amplitudes, or a norm differing from 1 by more than 1e-12.
  PureState(std::vector<Factor> labels, std::vector<Complex> amplitudes);

  // Rescales to unit norm first; throws InvalidInput on the zero vector.
  static PureState normalized(std::vector<Factor> labels, std::vector<Complex> amplitudes);

  static PureState basis(Factor label, unsigned bit);
  static PureState qubit(Factor label, Complex a0, Complex a1);

  std::span<const Factor> labels() const { return labels_; }
  std::span<const std::size_t> dims() const { return dims_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::size_t dim() const { return amplitudes_.size(); }

  std::optional<std::size_t> position_of(Factor f) const;
  double norm() const;

 private:
  std::vector<Factor> labels_;
  std::vector<std::size_t> dims_;
  std::vector<Complex> amplitudes_;
};

// Kronecker product; throws InvalidInput if the label sets overlap.
PureState tensor_product(const PureState& a, const PureState& b);

inline constexpr double kDensityTolerance = 1e-12;
inline constexpr double kNegativeEigenvalueTolerance = 1e-10;

// Hermitian, unit-trace, positive-semidefinite operator. Labels may be empty
// for an unstructured system; partial traces need them.
class DensityOperator {
 public:
  // Throws InvalidInput when Hermiticity or trace is off by more than 1e-12,
  // an eigenvalue is below -1e-10, or labels do not factor the dimension.
  explicit DensityOperator(ComplexMatrix matrix, std::vector<Factor> labels = {});

  std::size_t dim() const { return matrix_.dim(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  std::span<const Factor> labels() const { return labels_; }

  const Complex& operator()(std::size_t row, std::size_t col) const { return matrix_(row, col); }

 private:
  ComplexMatrix matrix_;
  std::vector<Factor> labels_;
};

// rho = |psi><psi|, carrying psi's labels.
DensityOperator density_from_pure(const PureState& psi);

// Trace out every factor not in `keep`. Kept factors stay in their original order.
DensityOperator partial_trace(const DensityOperator& rho, std::span<const Factor> keep);
DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<Factor> keep);

}  // namespace ccrsim::qcore
