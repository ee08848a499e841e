#pragma once

#include "qpurify/density.hpp"
#include "qpurify/types.hpp"

namespace qpurify {

// Normalized superposition
//   N (cos(theta) psi1 + e^{i phi} sin(theta) psi2),
//   N = (1 + sin(2 theta) Re(e^{i phi} <psi1|psi2>))^{-1/2}.
// Throws DegenerateSuperposition when the combination norm is <= 1e-10.
StateVector superpose_states(const StateVector &psi1, const StateVector &psi2,
                             const SuperposeParams &params);

// Hermitian interference operator
//   H(phi) = (e^{i phi} |psi2><psi1| + e^{-i phi} |psi1><psi2|) / 2.
Mat interference_operator(const StateVector &psi1, const StateVector &psi2,
                          double phi);

// Pure-state addition at the density level: extracts the principal states of
// two near-pure inputs, superposes them, and returns the resulting projector
//   N^2 [cos^2 rho1 + sin^2 rho2 + sin(2 theta) H(phi)].
// Throws NotPure if either input has purity < 1 - 1e-9.
DensityMatrix phi_add(const DensityMatrix &rho1, const DensityMatrix &rho2,
                      const SuperposeParams &params);

// Lifts a rank-R mixture to a pure state: in the eigenbasis the off-diagonal
// (j,k) blocks become sqrt(lambda_j lambda_k) e^{i(phi_j - phi_k)} with
// phi_1 = 0 prepended to the supplied R-1 phases. Eigenvalues <= 1e-10 do not
// count toward the rank. Throws PhaseCountMismatch unless exactly R-1 phases
// are given.
DensityMatrix purify_mixture(const DensityMatrix &rho,
                             const PhaseVector &phases);

} // namespace qpurify
