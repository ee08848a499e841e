#include "qpurify/density.hpp"

#include <cmath>
#include <sstream>

namespace qpurify {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigenFloor = -1e-10;
constexpr double kNormTol = 1e-12;
constexpr double kPurityTol = 1e-9;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// Rotate each column so its largest-magnitude component (lowest index on
// ties) is real and non-negative. Makes eigenbases reproducible.
void fix_column_phases(Mat &vectors) {
  for (int j = 0; j < vectors.cols(); ++j) {
    int pivot = 0;
    double best = -1.0;
    for (int i = 0; i < vectors.rows(); ++i) {
      const double mag = std::abs(vectors(i, j));
      if (mag > best) {  // strict: ties keep the lowest index
        best = mag;
        pivot = i;
      }
    }
    const cxd v = vectors(pivot, j);
    const double mag = std::abs(v);
    if (mag > 0.0)
      vectors.col(j) *= std::conj(v) / mag;
  }
}

} // namespace

StateVector::StateVector(Vec amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0)
    throw ValidationError(ErrorCode::InvalidInput, "empty state vector");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kNormTol)
    throw ValidationError(ErrorCode::NotNormalized,
                          "state norm deviates from 1 by " +
                              fmt(std::abs(norm - 1.0)) +
                              " (tolerance 1e-12)");
}

DensityMatrix::DensityMatrix(Mat entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
    throw ValidationError(ErrorCode::InvalidInput,
                          "density matrix must be square and non-empty");

  const double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol)
    throw ValidationError(ErrorCode::NotHermitian,
                          "max |rho - rho^dagger| entry is " + fmt(herm) +
                              " (tolerance 1e-12)");

  const double trace = entries_.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol)
    throw ValidationError(ErrorCode::NotUnitTrace,
                          "trace deviates from 1 by " +
                              fmt(std::abs(trace - 1.0)) +
                              " (tolerance 1e-12)");

  Eigen::SelfAdjointEigenSolver<Mat> solver(entries_);
  if (solver.info() != Eigen::Success)
    throw NumericError(ErrorCode::NumericFailure,
                       "eigendecomposition did not converge");
  const double lambda_min = solver.eigenvalues().minCoeff();
  if (lambda_min < kEigenFloor)
    throw ValidationError(ErrorCode::NotPositive,
                          "smallest eigenvalue is " + fmt(lambda_min) +
                              " (floor -1e-10)");
  if (lambda_min < 0.0) {
    // Rounding debris: clamp negatives to zero and renormalize the spectrum.
    RealVec clamped = solver.eigenvalues().cwiseMax(0.0);
    clamped /= clamped.sum();
    entries_ = solver.eigenvectors() * clamped.asDiagonal() *
               solver.eigenvectors().adjoint();
    // The reconstruction is Hermitian only to rounding; symmetrize exactly.
    entries_ = ((entries_ + entries_.adjoint()) / 2.0).eval();
  }
}

DensityMatrix make_density(const Mat &entries) { return DensityMatrix(entries); }

DensityMatrix from_state(const StateVector &psi) {
  const Vec &v = psi.amplitudes();
  return DensityMatrix(v * v.adjoint());
}

double purity(const DensityMatrix &rho) {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.entries().squaredNorm();
}

DensityMatrix mix(const DensityMatrix &rho1, const DensityMatrix &rho2,
                  double theta) {
  if (rho1.dim() != rho2.dim())
    throw ValidationError(ErrorCode::DimMismatch,
                          "cannot mix dim " + std::to_string(rho1.dim()) +
                              " with dim " + std::to_string(rho2.dim()));
  const double c = std::cos(theta), s = std::sin(theta);
  return DensityMatrix(c * c * rho1.entries() + s * s * rho2.entries());
}

Spectrum spectral(const DensityMatrix &rho) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(rho.entries());
  if (solver.info() != Eigen::Success)
    throw NumericError(ErrorCode::NumericFailure,
                       "eigendecomposition did not converge");

  // Eigen sorts ascending; flip to descending.
  const int n = rho.dim();
  Spectrum spec;
  spec.eigenvalues.resize(n);
  spec.eigenvectors.resize(n, n);
  for (int j = 0; j < n; ++j) {
    spec.eigenvalues(j) = solver.eigenvalues()(n - 1 - j);
    spec.eigenvectors.col(j) = solver.eigenvectors().col(n - 1 - j);
  }
  fix_column_phases(spec.eigenvectors);
  return spec;
}

StateVector principal_state(const DensityMatrix &rho) {
  const double p = purity(rho);
  if (p < 1.0 - kPurityTol)
    throw ValidationError(ErrorCode::NotPure,
                          "purity is " + fmt(p) +
                              ", need >= 1 - 1e-9 for a pure state");
  const Spectrum spec = spectral(rho);
  Vec v = spec.eigenvectors.col(0);
  v /= v.norm();
  return StateVector(std::move(v));
}

} // namespace qpurify
