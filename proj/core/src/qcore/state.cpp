#include "ccrsim/qcore/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ccrsim/errors.hpp"

namespace ccrsim::qcore {

std::string_view to_string(Factor f) {
  switch (f) {
    case Factor::kPath: return "path";
    case Factor::kSpin: return "spin";
    case Factor::kBs: return "bs";
  }
  return "?";
}

namespace {

void require_unique(std::span<const Factor> labels) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) {
        throw InvalidInput("duplicate factor label '" + std::string(to_string(labels[i])) + "'");
      }
}

double euclidean_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

PureState::PureState(std::vector<Factor> labels, std::vector<Complex> amplitudes)
    : labels_(std::move(labels)), dims_(labels_.size(), 2), amplitudes_(std::move(amplitudes)) {
  require_unique(labels_);
  if (labels_.empty()) throw InvalidInput("PureState: at least one factor required");
  if (amplitudes_.size() != (std::size_t{1} << labels_.size())) {
    throw InvalidInput("PureState: " + std::to_string(amplitudes_.size()) +
                       " amplitudes do not match " + std::to_string(labels_.size()) + " qubit factors");
  }
  for (const auto& z : amplitudes_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InvalidInput("PureState: non-finite amplitude");
  const double n = norm();
  if (std::abs(n - 1.0) > kNormTolerance) {
    throw InvalidInput("PureState: norm " + std::to_string(n) + " is not 1");
  }
}

PureState PureState::normalized(std::vector<Factor> labels, std::vector<Complex> amplitudes) {
  const double n = euclidean_norm(amplitudes);
  if (!(n > 0.0)) throw InvalidInput("PureState::normalized: zero vector");
  for (auto& z : amplitudes) z /= n;
  return PureState(std::move(labels), std::move(amplitudes));
}

PureState PureState::basis(Factor label, unsigned bit) {
  if (bit > 1) throw InvalidInput("PureState::basis: bit must be 0 or 1");
  std::vector<Complex> a(2);
  a[bit] = 1.0;
  return PureState({label}, std::move(a));
}

PureState PureState::qubit(Factor label, Complex a0, Complex a1) {
  return PureState({label}, {a0, a1});
}

std::optional<std::size_t> PureState::position_of(Factor f) const {
  const auto it = std::find(labels_.begin(), labels_.end(), f);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

double PureState::norm() const { return euclidean_norm(amplitudes_); }

PureState tensor_product(const PureState& a, const PureState& b) {
  std::vector<Factor> labels(a.labels().begin(), a.labels().end());
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  require_unique(labels);

  std::vector<Complex> amps;
  amps.reserve(a.dim() * b.dim());
  for (const auto& x : a.amplitudes())
    for (const auto& y : b.amplitudes()) amps.push_back(x * y);
  // The product of two unit vectors is a unit vector up to round-off; rescale
  // so chained products never drift past the norm tolerance.
  return PureState::normalized(std::move(labels), std::move(amps));
}

DensityOperator::DensityOperator(ComplexMatrix matrix, std::vector<Factor> labels)
    : matrix_(std::move(matrix)), labels_(std::move(labels)) {
  if (matrix_.dim() == 0) throw InvalidInput("DensityOperator: empty matrix");
  if (!labels_.empty()) {
    require_unique(labels_);
    if (matrix_.dim() != (std::size_t{1} << labels_.size()))
      throw InvalidInput("DensityOperator: labels do not factor the dimension");
  }
  const double herm = matrix_.hermiticity_defect();
  if (herm > kDensityTolerance)
    throw InvalidInput("DensityOperator: not Hermitian (defect " + std::to_string(herm) + ")");
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kDensityTolerance)
    throw InvalidInput("DensityOperator: trace " + std::to_string(tr.real()) + " is not 1");
  const auto ev = eigenvalues_hermitian(matrix_);
  if (!ev.empty() && ev.back() < -kNegativeEigenvalueTolerance)
    throw InvalidInput("DensityOperator: negative eigenvalue " + std::to_string(ev.back()));
}

DensityOperator density_from_pure(const PureState& psi) {
  if (std::abs(psi.norm() - 1.0) > kNormTolerance)
    throw InvalidInput("density_from_pure: state is not normalized");
  auto amps = psi.amplitudes();
  return DensityOperator(ComplexMatrix::outer(amps, amps),
                         std::vector<Factor>(psi.labels().begin(), psi.labels().end()));
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const Factor> keep) {
  const auto labels = rho.labels();
  if (labels.empty()) throw InvalidInput("partial_trace: operator has no factor labels");
  if (keep.empty()) throw InvalidInput("partial_trace: keep set is empty");

  const std::size_t n = labels.size();
  std::vector<bool> kept(n, false);
  for (Factor f : keep) {
    const auto it = std::find(labels.begin(), labels.end(), f);
    if (it == labels.end())
      throw InvalidInput("partial_trace: unknown factor '" + std::string(to_string(f)) + "'");
    kept[static_cast<std::size_t>(it - labels.begin())] = true;
  }

  // Bit positions (from the most significant digit) of kept and traced factors.
  std::vector<std::size_t> kept_bits, traced_bits;
  std::vector<Factor> kept_labels;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = n - 1 - i;
    if (kept[i]) {
      kept_bits.push_back(bit);
      kept_labels.push_back(labels[i]);
    } else {
      traced_bits.push_back(bit);
    }
  }

  auto scatter = [](std::size_t value, const std::vector<std::size_t>& bits) {
    std::size_t out = 0;
    for (std::size_t k = 0; k < bits.size(); ++k)
      if (value >> (bits.size() - 1 - k) & 1u) out |= std::size_t{1} << bits[k];
    return out;
  };

  const std::size_t dk = std::size_t{1} << kept_bits.size();
  const std::size_t dt = std::size_t{1} << traced_bits.size();
  std::vector<Complex> out(dk * dk);
  for (std::size_t r = 0; r < dk; ++r) {
    const std::size_t rbase = scatter(r, kept_bits);
    for (std::size_t c = 0; c < dk; ++c) {
      const std::size_t cbase = scatter(c, kept_bits);
      Complex acc = 0.0;
      for (std::size_t t = 0; t < dt; ++t) {
        const std::size_t toff = scatter(t, traced_bits);
        acc += rho(rbase | toff, cbase | toff);
      }
      out[r * dk + c] = acc;
    }
  }
  return DensityOperator(ComplexMatrix(dk, std::move(out)), std::move(kept_labels));
}

DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<Factor> keep) {
  return partial_trace(rho, std::span<const Factor>(keep.begin(), keep.size()));
}

}  // namespace ccrsim::qcore
