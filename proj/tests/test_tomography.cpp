#include <doctest.h>

#include <cmath>

#include "qpurify/phasespace.hpp"
#include "qpurify/tomography.hpp"
#include "support/oracles.hpp"

using namespace qpurify;
namespace qt = qpurify::testing;

namespace {

const Grid1D kPsiGrid(-10.0, 10.0, 513);

double slice_max_err(const TomogramSlice &slice, int level) {
  double worst = 0.0;
  for (int k = 0; k < slice.xgrid.n; ++k)
    worst = std::max(worst, std::abs(slice.values(k) -
                                     qt::oscillator_tomogram(
                                         level, slice.lambda, slice.mu,
                                         slice.xgrid.point(k))));
  return worst;
}

double integral(const TomogramSlice &slice) {
  return slice.values.sum() * slice.xgrid.spacing();
}

} // namespace

TEST_CASE("direction (1, 0) returns the position density") {
  const WaveFunction psi = oscillator_state(3, kPsiGrid);
  const TomogramSlice slice =
      tomogram_direct(psi, 1.0, 0.0, default_tomogram_grid(1.0, 0.0));
  CHECK(slice_max_err(slice, 3) <= 1e-10);
  CHECK(integral(slice) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("direction (0, 1) returns the momentum density") {
  for (const int n : {0, 1, 4}) {
    const WaveFunction psi = oscillator_state(n, kPsiGrid);
    const TomogramSlice slice =
        tomogram_direct(psi, 0.0, 1.0, default_tomogram_grid(0.0, 1.0));
    CHECK(slice_max_err(slice, n) <= 1e-10);
  }
}

TEST_CASE("gaussian tomogram matches the closed form along any direction") {
  const WaveFunction psi = oscillator_state(0, kPsiGrid);
  const double dirs[][2] = {{1.0, 1.0},  {0.3, -0.8},  {-2.0, 0.5},
                            {0.05, 1.0}, {-1.0, -1.0}, {0.7, 0.2}};
  for (const auto &d : dirs) {
    const double lambda = d[0], mu = d[1];
    const TomogramSlice slice =
        tomogram_direct(psi, lambda, mu, default_tomogram_grid(lambda, mu));
    double worst = 0.0;
    for (int k = 0; k < slice.xgrid.n; ++k)
      worst = std::max(worst,
                       std::abs(slice.values(k) -
                                qt::gaussian_tomogram(lambda, mu,
                                                      slice.xgrid.point(k))));
    CHECK(worst <= 1e-10);
    CHECK(integral(slice) == doctest::Approx(1.0).epsilon(1e-9));
  }

  // a nearly position-like direction needs the chirp refinement near its
  // cap, which in turn needs a finer state grid
  const WaveFunction fine = oscillator_state(0, Grid1D(-10.0, 10.0, 1025));
  const TomogramSlice steep =
      tomogram_direct(fine, 1.0, 0.05, default_tomogram_grid(1.0, 0.05));
  double worst = 0.0;
  for (int k = 0; k < steep.xgrid.n; ++k)
    worst = std::max(worst, std::abs(steep.values(k) -
                                     qt::gaussian_tomogram(
                                         1.0, 0.05, steep.xgrid.point(k))));
  CHECK(worst <= 1e-9);
}

TEST_CASE("oscillator tomograms are rotation invariant") {
  const WaveFunction psi = oscillator_state(2, kPsiGrid);
  const TomogramSlice slice =
      tomogram_direct(psi, std::cos(0.6), std::sin(0.6),
                      default_tomogram_grid(std::cos(0.6), std::sin(0.6)));
  CHECK(slice_max_err(slice, 2) <= 1e-9);
}

TEST_CASE("tomograms are homogeneous of degree -1 in the direction") {
  const WaveFunction psi = oscillator_state(1, kPsiGrid);
  const double lambda = 0.9, mu = -0.7;
  for (const double s : {-2.0, 0.5, 3.0}) {
    // Phi(s lambda, s mu; s x) = Phi(lambda, mu; x) / |s|
    const Grid1D base = default_tomogram_grid(lambda, mu);
    const Grid1D scaled(s < 0 ? s * base.max : s * base.min,
                        s < 0 ? s * base.min : s * base.max, base.n);
    const TomogramSlice ref = tomogram_direct(psi, lambda, mu, base);
    const TomogramSlice sc =
        tomogram_direct(psi, s * lambda, s * mu, scaled);
    double worst = 0.0;
    for (int k = 0; k < base.n; ++k) {
      const int ks = s < 0 ? base.n - 1 - k : k;
      worst = std::max(worst,
                       std::abs(sc.values(ks) - ref.values(k) / std::abs(s)));
    }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("near-singular mu falls back to the scaled position density") {
  const WaveFunction psi = oscillator_state(2, kPsiGrid);
  const double lambda = 1.5;
  const TomogramSlice slice = tomogram_direct(
      psi, lambda, 1e-9, default_tomogram_grid(lambda, 0.0));
  double worst = 0.0;
  for (int k = 0; k < slice.xgrid.n; ++k) {
    const double x = slice.xgrid.point(k);
    const double v = qt::oscillator_psi(2, x / lambda);
    worst = std::max(worst, std::abs(slice.values(k) - v * v / lambda));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("radon slices of the ground state match the closed form") {
  const WaveFunction psi = oscillator_state(0, kPsiGrid);
  const Grid1D qgrid(-7.0, 7.0, 141);
  const Grid1D pgrid(-7.0, 7.0, 141);
  const WignerGrid w = wigner(psi, qgrid, pgrid);

  const TomogramSlice slice =
      tomogram_radon(w, 1.0, 1.0, default_tomogram_grid(1.0, 1.0));
  double worst = 0.0;
  for (int k = 0; k < slice.xgrid.n; ++k)
    worst = std::max(worst, std::abs(slice.values(k) -
                                     qt::gaussian_tomogram(
                                         1.0, 1.0, slice.xgrid.point(k))));
  CHECK(worst <= 1e-4);
}

TEST_CASE("radon at (1, 0) reproduces the position marginal") {
  // axis-aligned lines keep one interpolation offset for a whole march, the
  // worst case for the cubic, so this check earns a finer grid
  const WaveFunction psi = oscillator_state(1, kPsiGrid);
  const Grid1D qgrid(-7.0, 7.0, 281);
  const WignerGrid w = wigner(psi, qgrid, qgrid);
  const TomogramSlice slice =
      tomogram_radon(w, 1.0, 0.0, default_tomogram_grid(1.0, 0.0));
  double worst = 0.0;
  for (int k = 0; k < slice.xgrid.n; ++k) {
    const double v = qt::oscillator_psi(1, slice.xgrid.point(k));
    worst = std::max(worst, std::abs(slice.values(k) - v * v));
  }
  CHECK(worst <= 1e-4);
}

TEST_CASE("radon agrees with the direct quadrature off-axis") {
  const Grid1D qgrid(-7.0, 7.0, 141);
  const double lambda = std::cos(1.1), mu = std::sin(1.1);
  const Grid1D xgrid = default_tomogram_grid(lambda, mu);
  for (const int n : {0, 1, 2, 3}) {
    const WaveFunction psi = oscillator_state(n, kPsiGrid);
    const WignerGrid w = wigner(psi, qgrid, qgrid);
    const TomogramSlice direct = tomogram_direct(psi, lambda, mu, xgrid);
    const TomogramSlice radon = tomogram_radon(w, lambda, mu, xgrid);
    CHECK((radon.values - direct.values).cwiseAbs().maxCoeff() <= 1e-4);
  }
}

TEST_CASE("radon scaling matches the direct homogeneity") {
  const WaveFunction psi = oscillator_state(0, kPsiGrid);
  const Grid1D qgrid(-7.0, 7.0, 141);
  const WignerGrid w = wigner(psi, qgrid, qgrid);
  const double s = 2.0;
  const Grid1D xgrid = default_tomogram_grid(s, s);
  const TomogramSlice slice = tomogram_radon(w, s * 1.0, s * 1.0, xgrid);
  double worst = 0.0;
  for (int k = 0; k < xgrid.n; ++k)
    worst = std::max(worst, std::abs(slice.values(k) -
                                     qt::gaussian_tomogram(
                                         s, s, xgrid.point(k))));
  CHECK(worst <= 1e-4);
}

TEST_CASE("tomogram_superposition reassembles and its cross term integrates") {
  const WaveFunction psi0 = oscillator_state(0, kPsiGrid);
  const WaveFunction psi1 = oscillator_state(1, kPsiGrid);
  const WaveFunction alpha = coherent_state(0.9, 0.4, kPsiGrid);
  const double lambda = std::cos(0.8), mu = std::sin(0.8);
  const Grid1D xgrid = default_tomogram_grid(lambda, mu);

  struct Pair {
    const WaveFunction *a;
    const WaveFunction *b;
  };
  const Pair pairs[] = {{&psi0, &psi1}, {&psi0, &alpha}};
  for (const auto &pr : pairs) {
    for (const double phi : {0.0, 1.3, kPi}) {
      const SuperposeParams params(0.6, phi);
      const TomogramSuperposition parts =
          tomogram_superposition(*pr.a, *pr.b, params, lambda, mu, xgrid);

      const double c = std::cos(params.theta), s = std::sin(params.theta);
      const RealVec combined =
          parts.norm_factor_sq *
          (c * c * parts.phi1.values + s * s * parts.phi2.values +
           2.0 * c * s * parts.interference);
      CHECK((parts.total.values - combined).cwiseAbs().maxCoeff() <= 1e-6);

      // the cross term integrates to Re(e^{i phi} <psi1|psi2>)
      const double cross_integral =
          parts.interference.sum() * xgrid.spacing();
      const cxd ov = overlap(*pr.a, *pr.b);
      const double expect = (std::polar(1.0, phi) * ov).real();
      CHECK(cross_integral == doctest::Approx(expect).epsilon(1e-8).scale(1.0));

      CHECK(integral(parts.total) == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("mixtures of tomograms stay normalized and non-negative") {
  const WaveFunction psi0 = oscillator_state(0, kPsiGrid);
  const WaveFunction psi2 = oscillator_state(2, kPsiGrid);
  const double lambda = 0.6, mu = 0.8;
  const Grid1D xgrid = default_tomogram_grid(lambda, mu);
  const TomogramSlice t0 = tomogram_direct(psi0, lambda, mu, xgrid);
  const TomogramSlice t2 = tomogram_direct(psi2, lambda, mu, xgrid);

  const double theta = 0.7;
  const double c2 = std::cos(theta) * std::cos(theta);
  RealVec mixed = c2 * t0.values + (1.0 - c2) * t2.values;
  CHECK(mixed.minCoeff() >= -1e-12);
  CHECK(mixed.sum() * xgrid.spacing() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("null directions are rejected") {
  const WaveFunction psi = oscillator_state(0, kPsiGrid);
  CHECK_THROWS_WITH_AS(
      tomogram_direct(psi, 1e-8, 1e-8, default_tomogram_grid(1.0, 0.0)),
      doctest::Contains("InvalidDirection"), ValidationError);

  const Grid1D qgrid(-7.0, 7.0, 141);
  const WignerGrid w = wigner(psi, qgrid, qgrid);
  CHECK_THROWS_WITH_AS(
      tomogram_radon(w, 0.0, 0.0, default_tomogram_grid(1.0, 0.0)),
      doctest::Contains("InvalidDirection"), ValidationError);
}

TEST_CASE("radon lines that exit live support are flagged") {
  // displaced state against a Wigner grid that clips it
  const WaveFunction alpha = coherent_state(2.5, 0.0, kPsiGrid);
  const Grid1D clipped(-3.0, 3.0, 129);
  const WignerGrid w = wigner(alpha, clipped, clipped);
  CHECK_THROWS_WITH_AS(
      tomogram_radon(w, 1.0, 1.0, default_tomogram_grid(1.0, 1.0)),
      doctest::Contains("SupportClipped"), NumericError);
}
