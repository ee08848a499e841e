#pragma once

#include "qpurify/types.hpp"

namespace qpurify {

// Normalized pure state. Construction rejects vectors whose norm deviates
// from 1 by more than 1e-12.
class StateVector {
public:
  explicit StateVector(Vec amplitudes);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Vec &amplitudes() const { return amplitudes_; }

private:
  Vec amplitudes_;
};

// Hermitian, positive semidefinite, unit-trace matrix. Construction validates
// all three invariants (tolerances 1e-12, 1e-12, and eigenvalue floor -1e-10);
// eigenvalues in (-1e-10, 0) are treated as rounding debris and clamped to
// zero with the spectrum renormalized.
class DensityMatrix {
public:
  explicit DensityMatrix(Mat entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Mat &entries() const { return entries_; }

private:
  Mat entries_;
};

// Eigendecomposition of a density matrix, eigenvalues descending. Each
// eigenvector's largest-magnitude component is made real and non-negative
// (ties broken by lowest index) so repeated runs agree bit for bit.
struct Spectrum {
  RealVec eigenvalues;  // descending
  Mat eigenvectors;     // column j pairs with eigenvalues[j]
};

DensityMatrix make_density(const Mat &entries);

DensityMatrix from_state(const StateVector &psi);

double purity(const DensityMatrix &rho);

// Convex combination cos^2(theta) rho1 + sin^2(theta) rho2.
DensityMatrix mix(const DensityMatrix &rho1, const DensityMatrix &rho2,
                  double theta);

Spectrum spectral(const DensityMatrix &rho);

// Dominant eigenvector of a (near-)pure density matrix, with the spectral
// phase convention applied. Throws NotPure if purity < 1 - 1e-9.
StateVector principal_state(const DensityMatrix &rho);

} // namespace qpurify
