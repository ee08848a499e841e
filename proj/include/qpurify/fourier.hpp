#pragma once

#include "qpurify/types.hpp"

namespace qpurify {

// Plain O(n^2) DFT helpers shared by the phase-space and tomography modules.
// Sizes stay small (n <= 4096 after refinement) and a table-based direct sum
// keeps results deterministic across platforms, so no FFT dependency.

// Forward DFT coefficients c_k = sum_j v_j e^{-2pi i jk/n}.
Vec dft(const Vec &values);

// Band-limited refinement: treats `values` as samples of a periodic
// band-limited function on an n-point grid and returns factor*(n-1)+1 samples
// covering the same span at spacing h/factor. Zero-pads the spectrum,
// splitting the Nyquist coefficient for even n. Exact (to rounding) for
// trigonometric polynomials below the Nyquist frequency; original samples are
// reproduced at every factor-th output point.
Vec refine(const Vec &values, int factor);

// Full periodic refinement of length factor*n, optionally shifted: output
// sample m sits at position (offset + m/factor) * h past the first input
// sample, wrapping around the period.
Vec refine_periodic(const Vec &values, int factor, double offset);

// Same, from precomputed DFT coefficients (for repeated shifts of one state).
Vec refine_periodic_coeffs(const Vec &coeffs, int factor, double offset);

// Fourier-series interpolation of grid samples at arbitrary fractional
// indices. eval(t) reproduces values[j] exactly at t = j.
class FourierSeries {
public:
  explicit FourierSeries(const Vec &values);

  cxd eval(double t) const;

private:
  Vec coeffs_;
  int n_;
};

} // namespace qpurify
