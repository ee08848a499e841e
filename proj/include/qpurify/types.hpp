#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qpurify/errors.hpp"

namespace qpurify {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealMat = Eigen::MatrixXd;
using RealVec = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Uniform 1-D grid of n points from min to max inclusive.
struct Grid1D {
  double min = 0.0;
  double max = 0.0;
  int n = 0;

  Grid1D() = default;
  Grid1D(double min_, double max_, int n_) : min(min_), max(max_), n(n_) {
    if (!(max > min) || n < 16)
      throw ValidationError(ErrorCode::InvalidGrid,
                            "need max > min and n >= 16, got [" +
                                std::to_string(min) + ", " +
                                std::to_string(max) + "] with n = " +
                                std::to_string(n));
  }

  double spacing() const { return (max - min) / (n - 1); }
  double point(int i) const { return min + i * spacing(); }

  bool operator==(const Grid1D &o) const {
    return min == o.min && max == o.max && n == o.n;
  }
};

inline double wrap_angle(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0)
    w += kTwoPi;
  if (w >= kTwoPi)  // fmod debris just below 2pi can round up
    w = 0.0;
  return w;
}

// Superposition weights: cos(theta) on the first component, sin(theta) and a
// relative phase exp(i*phi) on the second. phi is stored wrapped to [0, 2pi);
// theta must lie in [0, pi/2].
struct SuperposeParams {
  double theta = 0.0;
  double phi = 0.0;

  SuperposeParams() = default;
  SuperposeParams(double theta_, double phi_) : theta(theta_) {
    if (!(theta_ >= -1e-12 && theta_ <= kPi / 2 + 1e-12))
      throw ValidationError(ErrorCode::InvalidParams,
                            "theta must lie in [0, pi/2], got " +
                                std::to_string(theta_));
    if (theta < 0.0)
      theta = 0.0;
    if (theta > kPi / 2)
      theta = kPi / 2;
    phi = wrap_angle(phi_);
  }
};

// Relative phases for purification / entanglement recovery, one per spectral
// component beyond the first. Entries stored wrapped to [0, 2pi).
struct PhaseVector {
  std::vector<double> phases;

  PhaseVector() = default;
  explicit PhaseVector(std::vector<double> raw) : phases(std::move(raw)) {
    for (double &p : phases)
      p = wrap_angle(p);
  }

  std::size_t size() const { return phases.size(); }
};

} // namespace qpurify
