#include "ccrsim/qcore/matrix.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ccrsim/errors.hpp"

namespace ccrsim::qcore {

namespace {

constexpr double kHermitianTolerance = 1e-10;

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw InvalidInput("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                       " entries, got " + std::to_string(entries_.size()));
  }
  if (!std::all_of(entries_.begin(), entries_.end(), finite)) {
    throw InvalidInput("ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  std::vector<Complex> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return ComplexMatrix(dim, std::move(e));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = values[i];
  return ComplexMatrix(n, std::move(e));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw InvalidInput("ComplexMatrix::outer: length mismatch");
  const std::size_t n = a.size();
  std::vector<Complex> e(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) e[r * n + c] = a[r] * std::conj(b[c]);
  return ComplexMatrix(n, std::move(e));
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  std::vector<Complex> e(entries_.size());
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) e[c * dim_ + r] = std::conj((*this)(r, c));
  return ComplexMatrix(dim_, std::move(e));
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (other.dim_ != dim_) throw InvalidInput("ComplexMatrix: dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
  return worst;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw InvalidInput("ComplexMatrix: dimension mismatch");
  std::vector<Complex> e(a.entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries_[i] + b.entries_[i];
  return ComplexMatrix(a.dim_, std::move(e));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw InvalidInput("ComplexMatrix: dimension mismatch");
  std::vector<Complex> e(a.entries_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries_[i] - b.entries_[i];
  return ComplexMatrix(a.dim_, std::move(e));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw InvalidInput("ComplexMatrix: dimension mismatch");
  const std::size_t n = a.dim_;
  std::vector<Complex> e(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ark = a(r, k);
      for (std::size_t c = 0; c < n; ++c) e[r * n + c] += ark * b(k, c);
    }
  return ComplexMatrix(n, std::move(e));
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
  std::vector<Complex> e(m.entries_);
  for (auto& z : e) z *= s;
  return ComplexMatrix(m.dim_, std::move(e));
}

HermitianEigensystem eigensystem_hermitian(const ComplexMatrix& m) {
  if (!m.is_hermitian(kHermitianTolerance)) {
    throw InvalidInput("eigensystem_hermitian: matrix is not Hermitian (defect " +
                       std::to_string(m.hermiticity_defect()) + ")");
  }
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) a(r, c) = m(r, c);
  // Symmetrize so round-off in the input cannot leak into the spectrum.
  a = (0.5 * (a + a.adjoint())).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a);
  if (solver.info() != Eigen::Success) throw NumericalError("eigensystem_hermitian: no convergence");

  // Eigen returns ascending order.
  HermitianEigensystem out;
  out.values.resize(m.dim());
  std::vector<Complex> vecs(m.dim() * m.dim());
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = n - 1 - k;
    out.values[k] = solver.eigenvalues()(src);
    for (Eigen::Index r = 0; r < n; ++r) vecs[r * n + k] = solver.eigenvectors()(r, src);
  }
  out.vectors = ComplexMatrix(m.dim(), std::move(vecs));
  return out;
}

std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m) {
  return eigensystem_hermitian(m).values;
}

}  // namespace ccrsim::qcore
