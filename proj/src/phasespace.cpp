#include "qpurify/phasespace.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "qpurify/fourier.hpp"
#include "qpurify/kernels.hpp"

namespace qpurify {

namespace {

constexpr double kNormTol = 1e-8;
constexpr double kBoundaryRatio = 1e-6;
constexpr double kImagResidueTol = 1e-10;
constexpr double kDegenerateTol = 1e-10;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

void require_shared_grid(const Grid1D &g1, const Grid1D &g2,
                         const char *what) {
  if (!(g1 == g2))
    throw ValidationError(ErrorCode::GridMismatch,
                          std::string(what) + " must share one grid, got [" +
                              fmt(g1.min) + ", " + fmt(g1.max) + "] n=" +
                              std::to_string(g1.n) + " vs [" + fmt(g2.min) +
                              ", " + fmt(g2.max) + "] n=" +
                              std::to_string(g2.n));
}

void check_boundary_decay(const WaveFunction &psi) {
  const double peak = psi.values.cwiseAbs().maxCoeff();
  const double edge = std::max(std::abs(psi.values(0)),
                               std::abs(psi.values(psi.grid.n - 1)));
  if (edge > kBoundaryRatio * peak)
    throw NumericError(ErrorCode::BoundaryLeak,
                       "|psi| at the grid boundary is " + fmt(edge) +
                           " = " + fmt(edge / peak) +
                           " of the peak (need <= 1e-6); widen the grid");
}

// psi evaluated on the half-step lattice x = q_i + k h/2, k = -K..K, with
// zeros outside the state's domain. When every q_i of the output grid lands
// on that lattice the refined samples are plain lookups; otherwise each row
// is produced by a shifted band-limited refinement.
class HalfLattice {
public:
  HalfLattice(const WaveFunction &psi, const Grid1D &qgrid)
      : h_(psi.grid.spacing()), K_(psi.grid.n - 1), xmin_(psi.grid.min),
        qgrid_(qgrid) {
    fast_ = true;
    offsets_.resize(qgrid.n);
    for (int i = 0; i < qgrid.n; ++i) {
      const double t = (qgrid.point(i) - xmin_) / (h_ / 2);
      offsets_[i] = std::llround(t);
      if (std::abs(t - static_cast<double>(offsets_[i])) > 1e-9)
        fast_ = false;
    }
    if (fast_)
      fine_ = refine(psi.values, 2);
    else
      coeffs_ = dft(psi.values);
  }

  int row_size() const { return 2 * K_ + 1; }

  // row(k + K) = psi(q_i + k h/2)
  void fill_row(int i, Vec &row) const {
    if (fast_) {
      const long long j = offsets_[i];
      for (int k = -K_; k <= K_; ++k) {
        const long long idx = j + k;
        row(k + K_) = (idx >= 0 && idx <= 2LL * K_) ? fine_(idx) : cxd(0.0);
      }
      return;
    }
    const double off = (qgrid_.point(i) - xmin_) / h_;  // in grid units
    const Vec per = refine_periodic_coeffs(coeffs_, 2, off - K_ / 2.0);
    for (int k = -K_; k <= K_; ++k) {
      const double pos = off + 0.5 * k;
      row(k + K_) = (pos >= -1e-9 && pos <= K_ + 1e-9) ? per(k + K_) : cxd(0.0);
    }
  }

private:
  double h_;
  int K_;
  double xmin_;
  Grid1D qgrid_;
  bool fast_ = true;
  std::vector<long long> offsets_;
  Vec fine_;
  Vec coeffs_;
};

// (1/2pi) Int psiL(q + u/2) conj(psiR(q - u/2)) e^{-i p u} du on the grid,
// u discretized at the spacing of the states' own grid.
Mat transform_core(const WaveFunction &psiL, const WaveFunction &psiR,
                   const Grid1D &qgrid, const Grid1D &pgrid, bool strict) {
  require_shared_grid(psiL.grid, psiR.grid, "transform inputs");
  check_boundary_decay(psiL);
  if (&psiL != &psiR)
    check_boundary_decay(psiR);

  const double hu = psiL.grid.spacing();
  if (strict && !nyquist_ok(psiL, pgrid)) {
    const double pmax = std::max(std::abs(pgrid.min), std::abs(pgrid.max));
    throw NumericError(ErrorCode::GridTooCoarse,
                       "u-grid spacing " + fmt(hu) +
                           " exceeds the Nyquist bound pi/p_max = " +
                           fmt(kPi / pmax) + "; refine the state grid");
  }

  const HalfLattice ket(psiL, qgrid);
  const HalfLattice bra(psiR, qgrid);
  const int K = psiL.grid.n - 1;
  const int nu = 2 * K + 1;

  // e^{-i p u} split into cos/sin tables, one contiguous row per p point.
  std::vector<double> ctab(static_cast<std::size_t>(pgrid.n) * nu);
  std::vector<double> stab(ctab.size());
  for (int l = 0; l < pgrid.n; ++l) {
    const double p = pgrid.point(l);
    for (int k = 0; k < nu; ++k) {
      const double u = (k - K) * hu;
      ctab[static_cast<std::size_t>(l) * nu + k] = std::cos(p * u);
      stab[static_cast<std::size_t>(l) * nu + k] = std::sin(p * u);
    }
  }

  const double scale = hu / kTwoPi;
  Vec rowL(nu), rowR(nu);
  std::vector<double> gr(nu), gi(nu);
  Mat out(qgrid.n, pgrid.n);
  for (int i = 0; i < qgrid.n; ++i) {
    ket.fill_row(i, rowL);
    bra.fill_row(i, rowR);
    for (int k = 0; k < nu; ++k) {
      const cxd g = rowL(k) * std::conj(rowR(nu - 1 - k));
      gr[k] = g.real();
      gi[k] = g.imag();
    }
    for (int l = 0; l < pgrid.n; ++l) {
      double re = 0.0, im = 0.0;
      kernels::phase_dot(gr.data(), gi.data(),
                         &ctab[static_cast<std::size_t>(l) * nu],
                         &stab[static_cast<std::size_t>(l) * nu], nu, re, im);
      out(i, l) = cxd(re * scale, im * scale);
    }
  }
  return out;
}

} // namespace

WaveFunction make_wavefunction(const Grid1D &grid, Vec values) {
  if (static_cast<int>(values.size()) != grid.n)
    throw ValidationError(ErrorCode::DimMismatch,
                          "grid has " + std::to_string(grid.n) +
                              " points but got " +
                              std::to_string(values.size()) + " samples");
  const double norm_sq = values.squaredNorm() * grid.spacing();
  if (std::abs(norm_sq - 1.0) > kNormTol)
    throw ValidationError(ErrorCode::NotNormalized,
                          "discrete norm^2 deviates from 1 by " +
                              fmt(std::abs(norm_sq - 1.0)) +
                              " (tolerance 1e-8)");
  return WaveFunction{grid, std::move(values)};
}

WaveFunction oscillator_state(int level, const Grid1D &grid) {
  if (level < 0)
    throw ValidationError(ErrorCode::InvalidParams,
                          "oscillator level must be >= 0, got " +
                              std::to_string(level));
  // c_n = (2^n n! sqrt(pi))^{-1/2} through logs to dodge overflow
  const double log_norm =
      -0.5 * (level * std::log(2.0) + std::lgamma(level + 1.0) +
              0.5 * std::log(kPi));
  const double c = std::exp(log_norm);

  Vec v(grid.n);
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.point(i);
    double hk = 1.0, hk1 = 0.0;  // H_k(x), H_{k-1}(x)
    for (int k = 0; k < level; ++k) {
      const double next = 2.0 * x * hk - 2.0 * k * hk1;
      hk1 = hk;
      hk = next;
    }
    v(i) = c * hk * std::exp(-0.5 * x * x);
  }
  v /= v.norm() * std::sqrt(grid.spacing());
  return WaveFunction{grid, std::move(v)};
}

WaveFunction coherent_state(double q0, double p0, const Grid1D &grid) {
  Vec v(grid.n);
  const double c = std::pow(kPi, -0.25);
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.point(i);
    v(i) = c * std::exp(-0.5 * (x - q0) * (x - q0)) *
           std::polar(1.0, p0 * x);
  }
  v /= v.norm() * std::sqrt(grid.spacing());
  return WaveFunction{grid, std::move(v)};
}

cxd overlap(const WaveFunction &psi1, const WaveFunction &psi2) {
  require_shared_grid(psi1.grid, psi2.grid, "overlap inputs");
  return psi1.values.dot(psi2.values) * psi1.grid.spacing();
}

WaveFunction superpose_wavefunctions(const WaveFunction &psi1,
                                     const WaveFunction &psi2,
                                     const SuperposeParams &params) {
  require_shared_grid(psi1.grid, psi2.grid, "superposition inputs");

  const double c = std::cos(params.theta), s = std::sin(params.theta);
  const cxd phase = std::polar(1.0, params.phi);
  Vec combo = c * psi1.values + phase * s * psi2.values;

  const double norm = combo.norm() * std::sqrt(psi1.grid.spacing());
  if (norm <= kDegenerateTol)
    throw ValidationError(ErrorCode::DegenerateSuperposition,
                          "components cancel: combination norm is " +
                              fmt(norm));
  combo /= norm;
  return WaveFunction{psi1.grid, std::move(combo)};
}

bool nyquist_ok(const WaveFunction &psi, const Grid1D &pgrid) {
  const double pmax = std::max(std::abs(pgrid.min), std::abs(pgrid.max));
  if (pmax == 0.0)
    return true;
  return psi.grid.spacing() <= kPi / pmax;
}

WignerGrid wigner(const WaveFunction &psi, const Grid1D &qgrid,
                  const Grid1D &pgrid, bool strict) {
  const Mat w = transform_core(psi, psi, qgrid, pgrid, strict);

  const double residue = w.imag().cwiseAbs().maxCoeff();
  if (residue > kImagResidueTol)
    throw NumericError(ErrorCode::NumericFailure,
                       "Wigner imaginary residue " + fmt(residue) +
                           " exceeds 1e-10");
  return WignerGrid{qgrid, pgrid, w.real()};
}

CrossWignerGrid cross_wigner(const WaveFunction &psi1, const WaveFunction &psi2,
                             const Grid1D &qgrid, const Grid1D &pgrid,
                             bool strict) {
  return CrossWignerGrid{qgrid, pgrid,
                         transform_core(psi2, psi1, qgrid, pgrid, strict)};
}

WignerSuperposition wigner_superposition(const WaveFunction &psi1,
                                         const WaveFunction &psi2,
                                         const SuperposeParams &params,
                                         const Grid1D &qgrid,
                                         const Grid1D &pgrid, bool strict) {
  const WaveFunction combined = superpose_wavefunctions(psi1, psi2, params);

  WignerSuperposition out{
      wigner(combined, qgrid, pgrid, strict),
      wigner(psi1, qgrid, pgrid, strict),
      wigner(psi2, qgrid, pgrid, strict),
      RealMat(qgrid.n, pgrid.n),
      0.0,
  };

  const CrossWignerGrid cross = cross_wigner(psi1, psi2, qgrid, pgrid, strict);
  const RealMat cross_re = cross.values.real();
  const RealMat cross_im = cross.values.imag();
  kernels::rotate_real(std::cos(params.phi), std::sin(params.phi),
                       cross_re.data(), cross_im.data(),
                       out.interference.data(),
                       static_cast<std::size_t>(cross_re.size()));

  const cxd ovl = overlap(psi1, psi2);
  const double norm_sq =
      1.0 + std::sin(2.0 * params.theta) *
                (std::polar(1.0, params.phi) * ovl).real();
  out.norm_factor_sq = 1.0 / norm_sq;
  return out;
}

double purity_integral(const WignerGrid &w) {
  const double sum = kernels::sum_squares(
      w.values.data(), static_cast<std::size_t>(w.values.size()));
  return sum * w.qgrid.spacing() * w.pgrid.spacing();
}

Marginals marginals(const WignerGrid &w) {
  Marginals m;
  m.position = w.values.rowwise().sum() * w.pgrid.spacing();
  m.momentum = w.values.colwise().sum().transpose() * w.qgrid.spacing();
  return m;
}

} // namespace qpurify
