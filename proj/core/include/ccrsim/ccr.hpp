#pragma once

#include <cstddef>

#include "ccrsim/qcore/state.hpp"

// Complete complementarity relation for a path system:
//   C_re(rho) + P_vn(rho) + S(rho) = log2 d.
// The Z basis is the computational (path) basis of rho.
namespace ccrsim::ccr {

inline constexpr double kIdentityTolerance = 1e-10;

struct CcrTriple {
  double coherence = 0.0;             // bits
  double predictability = 0.0;        // bits
  double entanglement_entropy = 0.0;  // bits

  double sum() const { return coherence + predictability + entanglement_entropy; }
};

// Relative entropy of coherence S(Phi_Z(rho)) - S(rho).
double coherence_re(const qcore::DensityOperator& rho);

// von Neumann predictability log2 d - S(Phi_Z(rho)). Reads only the diagonal.
double predictability_vn(const qcore::DensityOperator& rho);

// S(rho); equals the entanglement with the rest of the system when rho is a
// reduced state of a globally pure state.
double entanglement_entropy(const qcore::DensityOperator& rho);

// All three components. Throws ConsistencyError if they do not add up to
// log2 d within kIdentityTolerance.
CcrTriple ccr_triple(const qcore::DensityOperator& rho);

// Largest |component sum - log2 d|.
double identity_defect(const CcrTriple& t, std::size_t dim);

}  // namespace ccrsim::ccr
