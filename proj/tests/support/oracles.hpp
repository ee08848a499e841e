#pragma once

// Closed-form reference values the numerical results are tested against.
// Everything here is independent of the library's transform code: plain
// pointwise formulas and brute-force index arithmetic only.

#include <cmath>

#include "qpurify/entangle.hpp"
#include "qpurify/types.hpp"

namespace qpurify::testing {

// Oscillator eigenstate psi_n(x) = (2^n n! sqrt(pi))^{-1/2} H_n(x) e^{-x^2/2}.
inline double hermite(int n, double x) {
  double hk = 1.0, hk1 = 0.0;
  for (int k = 0; k < n; ++k) {
    const double next = 2.0 * x * hk - 2.0 * k * hk1;
    hk1 = hk;
    hk = next;
  }
  return hk;
}

inline double oscillator_psi(int n, double x) {
  const double log_norm = -0.5 * (n * std::log(2.0) + std::lgamma(n + 1.0) +
                                  0.5 * std::log(kPi));
  return std::exp(log_norm) * hermite(n, x) * std::exp(-0.5 * x * x);
}

// Laguerre polynomial L_n(x).
inline double laguerre(int n, double x) {
  double lk = 1.0, lk1 = 0.0;
  for (int k = 0; k < n; ++k) {
    const double next = ((2 * k + 1 - x) * lk - k * lk1) / (k + 1);
    lk1 = lk;
    lk = next;
  }
  return lk;
}

// W_n(q,p) = ((-1)^n / pi) L_n(2(q^2+p^2)) e^{-(q^2+p^2)}.
inline double oscillator_wigner(int n, double q, double p) {
  const double r2 = q * q + p * p;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign / kPi * laguerre(n, 2.0 * r2) * std::exp(-r2);
}

// Cross-Wigner of ground and first excited state:
// W_10(q,p) = (sqrt(2)/pi) (q - i p) e^{-(q^2+p^2)}.
inline cxd ground_first_cross_wigner(double q, double p) {
  return std::sqrt(2.0) / kPi * cxd(q, -p) * std::exp(-(q * q + p * p));
}

// Ground-Gaussian tomogram along any direction:
// Phi(lambda, mu; x) = (pi (lambda^2 + mu^2))^{-1/2} e^{-x^2/(lambda^2+mu^2)}.
inline double gaussian_tomogram(double lambda, double mu, double x) {
  const double r2 = lambda * lambda + mu * mu;
  return std::exp(-x * x / r2) / std::sqrt(kPi * r2);
}

// Oscillator tomograms are rotation invariant:
// Phi_n(lambda, mu; x) = |psi_n(x / r)|^2 / r with r = sqrt(lambda^2 + mu^2).
inline double oscillator_tomogram(int n, double lambda, double mu, double x) {
  const double r = std::hypot(lambda, mu);
  const double v = oscillator_psi(n, x / r);
  return v * v / r;
}

// Brute-force partial traces and defect, no Eigen reductions involved.
inline Mat brute_partial_trace_B(const Mat &m, int dA, int dB) {
  Mat out = Mat::Zero(dA, dA);
  for (int a = 0; a < dA; ++a)
    for (int a2 = 0; a2 < dA; ++a2) {
      cxd acc = 0.0;
      for (int b = 0; b < dB; ++b)
        acc += m(a * dB + b, a2 * dB + b);
      out(a, a2) = acc;
    }
  return out;
}

inline Mat brute_partial_trace_A(const Mat &m, int dA, int dB) {
  Mat out = Mat::Zero(dB, dB);
  for (int b = 0; b < dB; ++b)
    for (int b2 = 0; b2 < dB; ++b2) {
      cxd acc = 0.0;
      for (int a = 0; a < dA; ++a)
        acc += m(a * dB + b, a * dB + b2);
      out(b, b2) = acc;
    }
  return out;
}

inline double brute_defect(const Mat &m, int dA, int dB) {
  const Mat ta = brute_partial_trace_B(m, dA, dB);
  const Mat tb = brute_partial_trace_A(m, dA, dB);
  double acc = 0.0;
  for (int a = 0; a < dA; ++a)
    for (int b = 0; b < dB; ++b)
      for (int a2 = 0; a2 < dA; ++a2)
        for (int b2 = 0; b2 < dB; ++b2) {
          const cxd diff =
              m(a * dB + b, a2 * dB + b2) - ta(a, a2) * tb(b, b2);
          acc += std::norm(diff);
        }
  return std::sqrt(acc);
}

} // namespace qpurify::testing
