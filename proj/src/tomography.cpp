#include "qpurify/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "qpurify/fourier.hpp"
#include "qpurify/kernels.hpp"

namespace qpurify {

namespace {

constexpr double kDirectionTol = 1e-12;
constexpr double kPositionBranchRatio = 1e-6;
constexpr double kClipTol = 1e-8;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

void require_direction(double lambda, double mu) {
  const double r2 = lambda * lambda + mu * mu;
  if (r2 < kDirectionTol)
    throw ValidationError(ErrorCode::InvalidDirection,
                          "lambda^2 + mu^2 = " + fmt(r2) +
                              " is below 1e-12");
}

void check_boundary_decay(const WaveFunction &psi) {
  const double peak = psi.values.cwiseAbs().maxCoeff();
  const double edge = std::max(std::abs(psi.values(0)),
                               std::abs(psi.values(psi.grid.n - 1)));
  if (edge > 1e-6 * peak)
    throw NumericError(ErrorCode::BoundaryLeak,
                       "|psi| at the grid boundary is " + fmt(edge) + " = " +
                           fmt(edge / peak) +
                           " of the peak (need <= 1e-6); widen the grid");
}

// Smallest power-of-two refinement (2..16) keeping the chirp phase increment
// per fine sample below 1/2 radian.
int choose_refinement(double h, double lambda, double mu, double ymax,
                      double xmax) {
  const double omega = (std::abs(lambda) * ymax + xmax) / std::abs(mu);
  int factor = 2;
  while (factor < 16 && (h / factor) * omega > 0.5)
    factor *= 2;
  return factor;
}

// F(x) = Int psi(y) exp(i lambda y^2 / 2mu - i x y / mu) dy as a Riemann sum
// over the refined samples. |F|^2 / 2pi|mu| is the tomogram.
Vec chirp_amplitudes(const WaveFunction &psi, double lambda, double mu,
                     const Grid1D &xgrid) {
  const double h = psi.grid.spacing();
  const double ymax =
      std::max(std::abs(psi.grid.min), std::abs(psi.grid.max));
  const double xmax = std::max(std::abs(xgrid.min), std::abs(xgrid.max));
  const int factor = choose_refinement(h, lambda, mu, ymax, xmax);

  const Vec fine = refine(psi.values, factor);
  const int m = static_cast<int>(fine.size());
  const double hf = h / factor;

  // theta_m(x) = a_m - x b_m with a_m = lambda y^2 / 2mu, b_m = y / mu
  std::vector<double> a(m), b(m), gr(m), gi(m), ctab(m), stab(m);
  for (int j = 0; j < m; ++j) {
    const double y = psi.grid.min + j * hf;
    a[j] = lambda * y * y / (2.0 * mu);
    b[j] = y / mu;
    gr[j] = fine(j).real();
    gi[j] = fine(j).imag();
  }

  Vec out(xgrid.n);
  for (int k = 0; k < xgrid.n; ++k) {
    const double x = xgrid.point(k);
    for (int j = 0; j < m; ++j) {
      const double theta = std::fma(-x, b[j], a[j]);
      ctab[j] = std::cos(theta);
      stab[j] = -std::sin(theta);  // phase_dot conjugates its table
    }
    double re = 0.0, im = 0.0;
    kernels::phase_dot(gr.data(), gi.data(), ctab.data(), stab.data(),
                       static_cast<std::size_t>(m), re, im);
    out(k) = cxd(re, im) * hf;
  }
  return out;
}

bool position_branch(double lambda, double mu) {
  return std::abs(mu) < kPositionBranchRatio * std::abs(lambda);
}

// psi(x / lambda) for every xgrid point by Fourier interpolation, zero
// outside the state's domain.
Vec scaled_samples(const WaveFunction &psi, double lambda,
                   const Grid1D &xgrid) {
  const FourierSeries series(psi.values);
  const double h = psi.grid.spacing();
  Vec out(xgrid.n);
  for (int k = 0; k < xgrid.n; ++k) {
    const double y = xgrid.point(k) / lambda;
    const double t = (y - psi.grid.min) / h;
    out(k) = (t >= -1e-9 && t <= psi.grid.n - 1 + 1e-9) ? series.eval(t)
                                                        : cxd(0.0);
  }
  return out;
}

// Catmull-Rom weights for fractional offset t in [0, 1).
inline void catmull_rom(double t, double w[4]) {
  const double t2 = t * t, t3 = t2 * t;
  w[0] = -0.5 * t3 + t2 - 0.5 * t;
  w[1] = 1.5 * t3 - 2.5 * t2 + 1.0;
  w[2] = -1.5 * t3 + 2.0 * t2 + 0.5 * t;
  w[3] = 0.5 * t3 - 0.5 * t2;
}

class WignerInterp {
public:
  explicit WignerInterp(const WignerGrid &w)
      : w_(w), hq_(w.qgrid.spacing()), hp_(w.pgrid.spacing()) {}

  bool inside(double q, double p) const {
    return q >= w_.qgrid.min && q <= w_.qgrid.max && p >= w_.pgrid.min &&
           p <= w_.pgrid.max;
  }

  // Cubic in the interior, bilinear in the outermost cell ring; callers only
  // ask for points inside the grid.
  double eval(double q, double p) const {
    const double fq = (q - w_.qgrid.min) / hq_;
    const double fp = (p - w_.pgrid.min) / hp_;
    int i = static_cast<int>(std::floor(fq));
    int j = static_cast<int>(std::floor(fp));
    i = std::clamp(i, 0, w_.qgrid.n - 2);
    j = std::clamp(j, 0, w_.pgrid.n - 2);
    const double tq = fq - i, tp = fp - j;

    if (i >= 1 && i <= w_.qgrid.n - 3 && j >= 1 && j <= w_.pgrid.n - 3) {
      double wq[4], wp[4];
      catmull_rom(tq, wq);
      catmull_rom(tp, wp);
      double acc = 0.0;
      for (int a = 0; a < 4; ++a) {
        double row = 0.0;
        for (int c = 0; c < 4; ++c)
          row += wp[c] * w_.values(i - 1 + a, j - 1 + c);
        acc += wq[a] * row;
      }
      return acc;
    }
    const double v00 = w_.values(i, j), v10 = w_.values(i + 1, j);
    const double v01 = w_.values(i, j + 1), v11 = w_.values(i + 1, j + 1);
    return (1 - tq) * ((1 - tp) * v00 + tp * v01) +
           tq * ((1 - tp) * v10 + tp * v11);
  }

  // |W| at the point clamped onto the grid edge, for clip detection.
  double clamped_abs(double q, double p) const {
    return std::abs(eval(std::clamp(q, w_.qgrid.min, w_.qgrid.max),
                         std::clamp(p, w_.pgrid.min, w_.pgrid.max)));
  }

private:
  const WignerGrid &w_;
  double hq_, hp_;
};

} // namespace

Grid1D default_tomogram_grid(double lambda, double mu) {
  require_direction(lambda, mu);
  const double r = std::hypot(lambda, mu);
  return Grid1D(-8.0 * r, 8.0 * r, 257);
}

TomogramSlice tomogram_direct(const WaveFunction &psi, double lambda,
                              double mu, const Grid1D &xgrid) {
  require_direction(lambda, mu);
  check_boundary_decay(psi);

  RealVec values(xgrid.n);
  if (position_branch(lambda, mu)) {
    const Vec samples = scaled_samples(psi, lambda, xgrid);
    for (int k = 0; k < xgrid.n; ++k)
      values(k) = std::norm(samples(k)) / std::abs(lambda);
  } else {
    const Vec amp = chirp_amplitudes(psi, lambda, mu, xgrid);
    const double scale = 1.0 / (kTwoPi * std::abs(mu));
    for (int k = 0; k < xgrid.n; ++k)
      values(k) = std::norm(amp(k)) * scale;
  }
  return TomogramSlice{lambda, mu, xgrid, std::move(values)};
}

TomogramSlice tomogram_radon(const WignerGrid &w, double lambda, double mu,
                             const Grid1D &xgrid) {
  require_direction(lambda, mu);
  const double r = std::hypot(lambda, mu);
  const double ct = lambda / r, st = mu / r;
  const double step = std::min(w.qgrid.spacing(), w.pgrid.spacing());
  const WignerInterp interp(w);

  RealVec values(xgrid.n);
  for (int k = 0; k < xgrid.n; ++k) {
    const double s = xgrid.point(k) / r;
    double acc = 0.0;
    for (const double sgn : {1.0, -1.0}) {
      double t = 0.5 * sgn * step;
      while (true) {
        const double q = s * ct - t * st;
        const double p = s * st + t * ct;
        if (!interp.inside(q, p)) {
          const double leak = interp.clamped_abs(q, p);
          if (leak > kClipTol)
            throw NumericError(
                ErrorCode::SupportClipped,
                "line (lambda=" + fmt(lambda) + ", mu=" + fmt(mu) +
                    ", x=" + fmt(xgrid.point(k)) +
                    ") leaves the grid where |W| = " + fmt(leak) +
                    " (tolerance 1e-8)");
          break;
        }
        acc += interp.eval(q, p);
        t += sgn * step;
      }
    }
    values(k) = acc * step / r;
  }
  return TomogramSlice{lambda, mu, xgrid, std::move(values)};
}

TomogramSuperposition tomogram_superposition(const WaveFunction &psi1,
                                             const WaveFunction &psi2,
                                             const SuperposeParams &params,
                                             double lambda, double mu,
                                             const Grid1D &xgrid) {
  require_direction(lambda, mu);
  const WaveFunction combined = superpose_wavefunctions(psi1, psi2, params);

  TomogramSuperposition out{
      tomogram_direct(combined, lambda, mu, xgrid),
      tomogram_direct(psi1, lambda, mu, xgrid),
      tomogram_direct(psi2, lambda, mu, xgrid),
      RealVec(xgrid.n),
      0.0,
  };

  const cxd phase = std::polar(1.0, params.phi);
  if (position_branch(lambda, mu)) {
    const Vec s1 = scaled_samples(psi1, lambda, xgrid);
    const Vec s2 = scaled_samples(psi2, lambda, xgrid);
    for (int k = 0; k < xgrid.n; ++k)
      out.interference(k) =
          (phase * s2(k) * std::conj(s1(k))).real() / std::abs(lambda);
  } else {
    const Vec f1 = chirp_amplitudes(psi1, lambda, mu, xgrid);
    const Vec f2 = chirp_amplitudes(psi2, lambda, mu, xgrid);
    const double scale = 1.0 / (kTwoPi * std::abs(mu));
    for (int k = 0; k < xgrid.n; ++k)
      out.interference(k) = (phase * f2(k) * std::conj(f1(k))).real() * scale;
  }

  const cxd ovl = overlap(psi1, psi2);
  const double norm_sq =
      1.0 + std::sin(2.0 * params.theta) * (phase * ovl).real();
  out.norm_factor_sq = 1.0 / norm_sq;
  return out;
}

} // namespace qpurify
