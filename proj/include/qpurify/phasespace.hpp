#pragma once

#include "qpurify/types.hpp"

namespace qpurify {

// Pure state sampled on a uniform grid. Construction checks the discrete
// norm sum |psi|^2 h against 1 (tolerance 1e-8).
struct WaveFunction {
  Grid1D grid;
  Vec values;
};

WaveFunction make_wavefunction(const Grid1D &grid, Vec values);

// Harmonic-oscillator eigenstate (physicists' Hermite functions, hbar = 1),
// renormalized on the grid.
WaveFunction oscillator_state(int level, const Grid1D &grid);

// Coherent state centered at (q0, p0), renormalized on the grid.
WaveFunction coherent_state(double q0, double p0, const Grid1D &grid);

// Discrete overlap <psi1|psi2> = sum conj(psi1) psi2 h. Grids must match.
cxd overlap(const WaveFunction &psi1, const WaveFunction &psi2);

// Superposition N (cos(theta) psi1 + e^{i phi} sin(theta) psi2) on a shared
// grid, N from the discrete overlap. Throws DegenerateSuperposition when the
// combination norm is <= 1e-10.
WaveFunction superpose_wavefunctions(const WaveFunction &psi1,
                                     const WaveFunction &psi2,
                                     const SuperposeParams &params);

// Real Wigner function sampled on a q x p grid, values(i, l) = W(q_i, p_l).
struct WignerGrid {
  Grid1D qgrid;
  Grid1D pgrid;
  RealMat values;
};

// Complex cross term W_21(q, p) of two states on a shared grid.
struct CrossWignerGrid {
  Grid1D qgrid;
  Grid1D pgrid;
  Mat values;
};

// W(q,p) = (1/2pi) Int psi(q + u/2) conj(psi(q - u/2)) e^{-i p u} du.
// The u-integral is discretized on the refined half-grid; with `strict` a
// violated Nyquist bound (h_u > pi / p_max) raises GridTooCoarse instead of
// proceeding. Throws BoundaryLeak unless |psi| at the grid ends is
// <= 1e-6 max|psi|, and NumericFailure if the imaginary residue of any sample
// exceeds 1e-10 before it is dropped.
WignerGrid wigner(const WaveFunction &psi, const Grid1D &qgrid,
                  const Grid1D &pgrid, bool strict = false);

// W_21(q,p) = (1/2pi) Int psi2(q + u/2) conj(psi1(q - u/2)) e^{-i p u} du.
// Integrates to <psi1|psi2> over the full plane.
CrossWignerGrid cross_wigner(const WaveFunction &psi1, const WaveFunction &psi2,
                             const Grid1D &qgrid, const Grid1D &pgrid,
                             bool strict = false);

// Whether the u-grid spacing the transform will use satisfies the Nyquist
// bound h_u <= pi / max|p| for this pairing of state and momentum grid.
bool nyquist_ok(const WaveFunction &psi, const Grid1D &pgrid);

// All pieces of the two-state superposition law:
//   total = N^2 (cos^2 w1 + sin^2 w2 + sin(2 theta) interference),
// with interference = Re(e^{i phi} W_21).
struct WignerSuperposition {
  WignerGrid total;
  WignerGrid w1;
  WignerGrid w2;
  RealMat interference;
  double norm_factor_sq = 0.0;
};

WignerSuperposition wigner_superposition(const WaveFunction &psi1,
                                         const WaveFunction &psi2,
                                         const SuperposeParams &params,
                                         const Grid1D &qgrid,
                                         const Grid1D &pgrid,
                                         bool strict = false);

// sum W^2 h_q h_p; equals tr(rho^2) / 2pi when the grid captures the state.
double purity_integral(const WignerGrid &w);

struct Marginals {
  RealVec position;  // sum over p of W h_p, one entry per q point
  RealVec momentum;  // sum over q of W h_q, one entry per p point
};

Marginals marginals(const WignerGrid &w);

} // namespace qpurify
