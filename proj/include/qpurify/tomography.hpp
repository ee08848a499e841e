#pragma once

#include "qpurify/phasespace.hpp"
#include "qpurify/types.hpp"

namespace qpurify {

// Symplectic tomogram along direction (lambda, mu), sampled on xgrid.
// Non-negative up to rounding; integrates to 1 in x when xgrid covers the
// support. Directions need lambda^2 + mu^2 >= 1e-12.
struct TomogramSlice {
  double lambda = 0.0;
  double mu = 0.0;
  Grid1D xgrid;
  RealVec values;
};

// 257 points spanning +/- 8 sqrt(lambda^2 + mu^2).
Grid1D default_tomogram_grid(double lambda, double mu);

// Direct quadrature of
//   Phi(lambda, mu; x) =
//     (1/2pi|mu|) |Int psi(y) exp(i lambda y^2 / 2mu - i x y / mu) dy|^2
// on a band-limited refinement of psi (factor adapted to the chirp
// bandwidth). For |mu| < 1e-6 |lambda| the limit form
// |psi(x/lambda)|^2 / |lambda| is evaluated by Fourier interpolation.
// Throws InvalidDirection for a null direction and BoundaryLeak when psi has
// not decayed at its grid ends.
TomogramSlice tomogram_direct(const WaveFunction &psi, double lambda,
                              double mu, const Grid1D &xgrid);

// Radon line integral of a precomputed Wigner grid:
//   Phi(lambda, mu; x) = (1/r) Int W(s cos - t sin, s sin + t cos) dt,
// r = sqrt(lambda^2 + mu^2), s = x/r, cos = lambda/r, sin = mu/r. Midpoint
// marching with step min(h_q, h_p) and Catmull-Rom cubic interpolation
// (bilinear in the outermost cell ring). Throws SupportClipped if a line
// leaves the grid where |W| > 1e-8.
TomogramSlice tomogram_radon(const WignerGrid &w, double lambda, double mu,
                             const Grid1D &xgrid);

// All pieces of the superposition law along one direction:
//   total = N^2 (cos^2 phi1 + sin^2 phi2 + sin(2 theta) interference),
// with interference(x) = Re(e^{i phi} F2(x) conj(F1(x))) / 2pi|mu| computed
// by the same quadrature as the diagonal slices. The interference term
// integrates to Re(e^{i phi} <psi1|psi2>).
struct TomogramSuperposition {
  TomogramSlice total;
  TomogramSlice phi1;
  TomogramSlice phi2;
  RealVec interference;
  double norm_factor_sq = 0.0;
};

TomogramSuperposition tomogram_superposition(const WaveFunction &psi1,
                                             const WaveFunction &psi2,
                                             const SuperposeParams &params,
                                             double lambda, double mu,
                                             const Grid1D &xgrid);

} // namespace qpurify
