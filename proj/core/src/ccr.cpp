#include "ccrsim/ccr.hpp"

#include <cmath>
#include <string>

#include "ccrsim/errors.hpp"
#include "ccrsim/qcore/entropy.hpp"

namespace ccrsim::ccr {

namespace {

// Differences of entropies that are analytically >= 0 may come out as -1e-16.
double nonnegative(double v, const char* what) {
  if (v < -kIdentityTolerance) {
    throw NumericalError(std::string(what) + " is negative: " + std::to_string(v));
  }
  return v < 0.0 ? 0.0 : v;
}

}  // namespace

double coherence_re(const qcore::DensityOperator& rho) {
  const double s_dephased = qcore::vn_entropy(qcore::dephase_z(rho));
  return nonnegative(s_dephased - qcore::vn_entropy(rho), "coherence");
}

double predictability_vn(const qcore::DensityOperator& rho) {
  const double s_max = std::log2(static_cast<double>(rho.dim()));
  return nonnegative(s_max - qcore::vn_entropy(qcore::dephase_z(rho)), "predictability");
}

double entanglement_entropy(const qcore::DensityOperator& rho) { return qcore::vn_entropy(rho); }

CcrTriple ccr_triple(const qcore::DensityOperator& rho) {
  const double s_rho = qcore::vn_entropy(rho);
  const double s_dephased = qcore::vn_entropy(qcore::dephase_z(rho));
  const double s_max = std::log2(static_cast<double>(rho.dim()));

  CcrTriple t;
  t.coherence = nonnegative(s_dephased - s_rho, "coherence");
  t.predictability = nonnegative(s_max - s_dephased, "predictability");
  t.entanglement_entropy = s_rho;

  const double defect = identity_defect(t, rho.dim());
  if (defect > kIdentityTolerance) {
    throw ConsistencyError("CCR identity violated by " + std::to_string(defect));
  }
  return t;
}

double identity_defect(const CcrTriple& t, std::size_t dim) {
  return std::abs(t.sum() - std::log2(static_cast<double>(dim)));
}

}  // namespace ccrsim::ccr
