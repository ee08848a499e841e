#include "qpurify/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qpurify {

namespace {

constexpr double kSpectraTol = 1e-8;
constexpr double kRankTol = 1e-10;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

Mat kron(const Mat &a, const Mat &b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

} // namespace

BipartiteDensity make_bipartite(int dimA, int dimB, DensityMatrix rho) {
  if (dimA < 1 || dimB < 1 || dimA * dimB != rho.dim())
    throw ValidationError(ErrorCode::DimFactorMismatch,
                          "dim " + std::to_string(rho.dim()) +
                              " does not factor as " + std::to_string(dimA) +
                              " x " + std::to_string(dimB));
  return BipartiteDensity{dimA, dimB, std::move(rho)};
}

BipartiteDensity tensor_product(const DensityMatrix &rhoA,
                                const DensityMatrix &rhoB) {
  return BipartiteDensity{rhoA.dim(), rhoB.dim(),
                          DensityMatrix(kron(rhoA.entries(), rhoB.entries()))};
}

DensityMatrix partial_trace(const BipartiteDensity &rho, Subsystem keep) {
  const int dA = rho.dimA, dB = rho.dimB;
  const Mat &m = rho.rho.entries();

  // composite index i = a * dimB + b
  if (keep == Subsystem::A) {
    Mat out = Mat::Zero(dA, dA);
    for (int a = 0; a < dA; ++a)
      for (int a2 = 0; a2 < dA; ++a2)
        for (int b = 0; b < dB; ++b)
          out(a, a2) += m(a * dB + b, a2 * dB + b);
    return DensityMatrix(std::move(out));
  }
  Mat out = Mat::Zero(dB, dB);
  for (int b = 0; b < dB; ++b)
    for (int b2 = 0; b2 < dB; ++b2)
      for (int a = 0; a < dA; ++a)
        out(b, b2) += m(a * dB + b, a * dB + b2);
  return DensityMatrix(std::move(out));
}

SchmidtDecomposition schmidt(const StateVector &psi, int dimA, int dimB) {
  if (dimA < 1 || dimB < 1 || dimA * dimB != psi.dim())
    throw ValidationError(ErrorCode::DimFactorMismatch,
                          "dim " + std::to_string(psi.dim()) +
                              " does not factor as " + std::to_string(dimA) +
                              " x " + std::to_string(dimB));

  Mat amp(dimA, dimB);
  for (int a = 0; a < dimA; ++a)
    for (int b = 0; b < dimB; ++b)
      amp(a, b) = psi.amplitudes()(a * dimB + b);

  Eigen::JacobiSVD<Mat> svd(amp, Eigen::ComputeThinU | Eigen::ComputeThinV);

  SchmidtDecomposition out;
  out.coefficients = svd.singularValues();  // descending
  out.basisA = svd.matrixU();
  out.basisB = svd.matrixV().conjugate();

  // Gauge: make each |a_j>'s largest-magnitude component real non-negative
  // (lowest index on ties) and move the compensating phase onto |b_j>, which
  // keeps sum_j sigma_j |a_j><b_j*| equal to the amplitude matrix.
  for (int j = 0; j < out.basisA.cols(); ++j) {
    int pivot = 0;
    double best = -1.0;
    for (int i = 0; i < out.basisA.rows(); ++i) {
      const double mag = std::abs(out.basisA(i, j));
      if (mag > best) {
        best = mag;
        pivot = i;
      }
    }
    const cxd v = out.basisA(pivot, j);
    if (std::abs(v) > 0.0) {
      const cxd rot = std::conj(v) / std::abs(v);
      out.basisA.col(j) *= rot;
      out.basisB.col(j) *= std::conj(rot);
    }
  }
  return out;
}

BipartiteDensity phi_multiply(const DensityMatrix &rhoA,
                              const DensityMatrix &rhoB,
                              const PhaseVector &phases) {
  const Spectrum specA = spectral(rhoA);
  const Spectrum specB = spectral(rhoB);

  const int dA = rhoA.dim(), dB = rhoB.dim();
  const int dmax = std::max(dA, dB), dmin = std::min(dA, dB);

  // Equal-spectrum precondition, zero-padded to the longer list.
  double gap = 0.0;
  for (int j = 0; j < dmax; ++j) {
    const double la = (j < dA) ? specA.eigenvalues(j) : 0.0;
    const double lb = (j < dB) ? specB.eigenvalues(j) : 0.0;
    gap = std::max(gap, std::abs(la - lb));
  }
  if (gap > kSpectraTol)
    throw ValidationError(ErrorCode::SpectraMismatch,
                          "largest eigenvalue gap between the factors is " +
                              fmt(gap) + " (tolerance 1e-8)");

  RealVec lambda_bar(dmin);
  for (int j = 0; j < dmin; ++j)
    lambda_bar(j) = 0.5 * (specA.eigenvalues(j) + specB.eigenvalues(j));

  int rank = 0;
  while (rank < dmin && lambda_bar(rank) > kRankTol)
    ++rank;

  if (static_cast<int>(phases.size()) != rank - 1)
    throw ValidationError(ErrorCode::PhaseCountMismatch,
                          "rank " + std::to_string(rank) +
                              " factors need " + std::to_string(rank - 1) +
                              " phases, got " + std::to_string(phases.size()));

  Vec psi = Vec::Zero(dA * dB);
  for (int j = 0; j < rank; ++j) {
    const double phi = (j == 0) ? 0.0 : phases.phases[j - 1];
    const cxd w = std::sqrt(lambda_bar(j)) * std::polar(1.0, phi);
    for (int a = 0; a < dA; ++a)
      for (int b = 0; b < dB; ++b)
        psi(a * dB + b) +=
            w * specA.eigenvectors(a, j) * specB.eigenvectors(b, j);
  }
  psi /= psi.norm();
  return BipartiteDensity{dA, dB, from_state(StateVector(std::move(psi)))};
}

double entanglement_defect(const BipartiteDensity &rho) {
  const DensityMatrix trB = partial_trace(rho, Subsystem::A);
  const DensityMatrix trA = partial_trace(rho, Subsystem::B);
  return (rho.rho.entries() - kron(trB.entries(), trA.entries())).norm();
}

} // namespace qpurify
