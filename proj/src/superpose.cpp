#include "qpurify/superpose.hpp"

#include <cmath>

namespace qpurify {

namespace {

constexpr double kDegenerateTol = 1e-10;
constexpr double kRankTol = 1e-10;

void require_same_dim(int d1, int d2) {
  if (d1 != d2)
    throw ValidationError(ErrorCode::DimMismatch,
                          "dimensions " + std::to_string(d1) + " and " +
                              std::to_string(d2) + " differ");
}

} // namespace

StateVector superpose_states(const StateVector &psi1, const StateVector &psi2,
                             const SuperposeParams &params) {
  require_same_dim(psi1.dim(), psi2.dim());

  const double c = std::cos(params.theta), s = std::sin(params.theta);
  const cxd phase = std::polar(1.0, params.phi);
  const Vec combo = c * psi1.amplitudes() + phase * s * psi2.amplitudes();

  const double norm = combo.norm();
  if (norm <= kDegenerateTol)
    throw ValidationError(ErrorCode::DegenerateSuperposition,
                          "components cancel: combination norm is " +
                              std::to_string(norm));
  return StateVector(combo / norm);
}

Mat interference_operator(const StateVector &psi1, const StateVector &psi2,
                          double phi) {
  require_same_dim(psi1.dim(), psi2.dim());
  const cxd phase = std::polar(1.0, phi);
  const Mat cross = phase * (psi2.amplitudes() * psi1.amplitudes().adjoint());
  return (cross + cross.adjoint()) / 2.0;
}

DensityMatrix phi_add(const DensityMatrix &rho1, const DensityMatrix &rho2,
                      const SuperposeParams &params) {
  require_same_dim(rho1.dim(), rho2.dim());
  const StateVector psi1 = principal_state(rho1);
  const StateVector psi2 = principal_state(rho2);
  return from_state(superpose_states(psi1, psi2, params));
}

DensityMatrix purify_mixture(const DensityMatrix &rho,
                             const PhaseVector &phases) {
  const Spectrum spec = spectral(rho);

  int rank = 0;
  while (rank < spec.eigenvalues.size() && spec.eigenvalues(rank) > kRankTol)
    ++rank;

  if (static_cast<int>(phases.size()) != rank - 1)
    throw ValidationError(ErrorCode::PhaseCountMismatch,
                          "rank " + std::to_string(rank) + " mixture needs " +
                              std::to_string(rank - 1) + " phases, got " +
                              std::to_string(phases.size()));

  Vec w = Vec::Zero(rho.dim());
  for (int j = 0; j < rank; ++j) {
    const double phi = (j == 0) ? 0.0 : phases.phases[j - 1];
    w += std::sqrt(spec.eigenvalues(j)) * std::polar(1.0, phi) *
         spec.eigenvectors.col(j);
  }
  w /= w.norm();
  return from_state(StateVector(std::move(w)));
}

} // namespace qpurify
