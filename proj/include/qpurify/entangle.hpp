#pragma once

#include "qpurify/density.hpp"
#include "qpurify/types.hpp"

namespace qpurify {

// Density matrix on a composite space with the index convention
// i = a * dimB + b.
struct BipartiteDensity {
  int dimA = 0;
  int dimB = 0;
  DensityMatrix rho;
};

BipartiteDensity make_bipartite(int dimA, int dimB, DensityMatrix rho);

BipartiteDensity tensor_product(const DensityMatrix &rhoA,
                                const DensityMatrix &rhoB);

enum class Subsystem { A, B };

// Reduced state of the kept subsystem.
DensityMatrix partial_trace(const BipartiteDensity &rho, Subsystem keep);

// Schmidt decomposition of a pure bipartite state, coefficients descending.
// Basis A is phase-fixed by the spectral convention; basis B carries the
// compensating phases so the expansion reproduces psi. coefficients[j]^2 are
// the eigenvalues of either reduced state.
struct SchmidtDecomposition {
  RealVec coefficients;
  Mat basisA;  // column j = |a_j>
  Mat basisB;  // column j = |b_j>
};

SchmidtDecomposition schmidt(const StateVector &psi, int dimA, int dimB);

// Entanglement recovery from a product of equal-spectrum subsystem states:
//   psi = sum_j sqrt(lambda_bar_j) e^{i phi_j} |a_j> x |b_j>,
// lambda_bar averaging the two (sorted, zero-padded) spectra, phi_1 = 0
// prepended to the supplied R-1 phases, R the number of lambda_bar > 1e-10.
// Throws SpectraMismatch when the spectra differ anywhere by more than 1e-8
// and PhaseCountMismatch unless exactly R-1 phases are given.
BipartiteDensity phi_multiply(const DensityMatrix &rhoA,
                              const DensityMatrix &rhoB,
                              const PhaseVector &phases);

// Frobenius distance between rho and the product of its partial traces.
// Zero exactly for product states; sqrt(3)/2 for a Bell state.
double entanglement_defect(const BipartiteDensity &rho);

} // namespace qpurify
