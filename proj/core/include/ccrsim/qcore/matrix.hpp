#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ccrsim::qcore {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major. Dimensions in this library never
// exceed 8, so everything is stored and multiplied naively.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  // Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);

  // Throws InvalidInput if entries.size() != dim*dim or any entry is not finite.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  // |a><b|
  static ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);

  std::size_t dim() const { return dim_; }
  std::span<const Complex> entries() const { return entries_; }

  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  Complex trace() const;
  ComplexMatrix adjoint() const;

  // Largest |m_ij - conj(m_ji)|.
  double hermiticity_defect() const;
  bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

  // Largest entrywise modulus of (*this - other).
  double max_abs_diff(const ComplexMatrix& other) const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& m);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

// Spectral data of a Hermitian matrix. Eigenvalues descending; column k of
// `vectors` (stored row-major) belongs to values[k].
struct HermitianEigensystem {
  std::vector<double> values;
  ComplexMatrix vectors;
};

// Throws InvalidInput if m is not Hermitian within 1e-10.
HermitianEigensystem eigensystem_hermitian(const ComplexMatrix& m);

// Real eigenvalues in descending order. Throws InvalidInput if m is not
// Hermitian within 1e-10.
std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m);

}  // namespace ccrsim::qcore
