#include <doctest.h>

#include <cmath>

#include "qpurify/density.hpp"
#include "support/generators.hpp"

using namespace qpurify;
namespace qt = qpurify::testing;

namespace {

Mat mat2(cxd a, cxd b, cxd c, cxd d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

} // namespace

TEST_CASE("make_density accepts textbook states") {
  const DensityMatrix half = make_density(Mat::Identity(2, 2) * 0.5);
  CHECK(half.dim() == 2);

  // |+><+|
  const DensityMatrix plus = make_density(mat2(0.5, 0.5, 0.5, 0.5));
  const Spectrum spec = spectral(plus);
  CHECK(spec.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(spec.eigenvalues(1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  CHECK(spec.eigenvectors(0, 0).real() ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(spec.eigenvectors(1, 0).real() ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("make_density rejects each violated invariant by name") {
  CHECK_THROWS_WITH_AS(make_density(mat2(0.5, 0.1, 0.2, 0.5)),
                       doctest::Contains("NotHermitian"), ValidationError);
  CHECK_THROWS_WITH_AS(make_density(mat2(0.6, 0.0, 0.0, 0.6)),
                       doctest::Contains("NotUnitTrace"), ValidationError);
  // eigenvalues 0.5 +- sqrt(0.26): lower one is about -0.0099
  CHECK_THROWS_WITH_AS(make_density(mat2(0.6, 0.5, 0.5, 0.4)),
                       doctest::Contains("NotPositive"), ValidationError);
  try {
    make_density(mat2(0.6, 0.5, 0.5, 0.4));
    CHECK(false);
  } catch (const ValidationError &err) {
    CHECK(err.code() == ErrorCode::NotPositive);
    CHECK(std::string(err.what()).find("-0.00990") != std::string::npos);
  }
}

TEST_CASE("make_density clamps rounding-level negative eigenvalues") {
  // eigenvalues 1 + 5e-11 and -5e-11: inside the -1e-10 floor
  const double eps = 5e-11;
  const DensityMatrix rho = make_density(mat2(1.0 + eps, 0.0, 0.0, -eps));
  const Spectrum spec = spectral(rho);
  CHECK(spec.eigenvalues.minCoeff() >= 0.0);
  CHECK(rho.entries().trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(purity(rho) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("purity spans projectors to maximally mixed") {
  CHECK(purity(make_density(mat2(1, 0, 0, 0))) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(purity(make_density(Mat::Identity(2, 2) * 0.5)) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(purity(make_density(Mat::Identity(4, 4) * 0.25)) ==
        doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("from_state ignores global phase") {
  qt::Rng rng(5);
  const StateVector base = qt::random_state(rng, 5);
  const DensityMatrix ref = from_state(base);
  for (int k = 0; k < 16; ++k) {
    const double alpha = kTwoPi * k / 16.0;
    const StateVector rotated(
        Vec(std::polar(1.0, alpha) * base.amplitudes()));
    const DensityMatrix rho = from_state(rotated);
    CHECK((rho.entries() - ref.entries()).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("from_state basis states and complex amplitudes") {
  Vec e0(2);
  e0 << 1.0, 0.0;
  const DensityMatrix rho0 = from_state(StateVector(e0));
  CHECK(rho0.entries()(0, 0).real() == doctest::Approx(1.0));
  CHECK(std::abs(rho0.entries()(1, 1)) <= 1e-15);

  Vec plus_i(2);
  plus_i << cxd(1.0 / std::sqrt(2.0), 0.0), cxd(0.0, 1.0 / std::sqrt(2.0));
  const DensityMatrix rho = from_state(StateVector(plus_i));
  CHECK(rho.entries()(0, 1).imag() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(rho.entries()(1, 0).imag() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("state vectors must be normalized") {
  Vec v(2);
  v << 1.0, 1.0;
  CHECK_THROWS_WITH_AS(StateVector{v}, doctest::Contains("NotNormalized"),
                       ValidationError);
}

TEST_CASE("mix endpoints, midpoint, and symmetry") {
  const DensityMatrix r0 = make_density(mat2(1, 0, 0, 0));
  const DensityMatrix r1 = make_density(mat2(0, 0, 0, 1));

  CHECK((mix(r0, r1, 0.0).entries() - r0.entries()).norm() <= 1e-15);

  const DensityMatrix even = mix(r0, r1, kPi / 4.0);
  CHECK(even.entries()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(even.entries()(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));

  qt::Rng rng(7);
  const DensityMatrix a = qt::random_density(rng, 4);
  const DensityMatrix b = qt::random_density(rng, 4);
  for (const double theta : {0.3, 0.9, 1.4}) {
    const DensityMatrix ab = mix(a, b, theta);
    const DensityMatrix ba = mix(b, a, kPi / 2.0 - theta);
    CHECK((ab.entries() - ba.entries()).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK((mix(a, a, theta).entries() - a.entries()).cwiseAbs().maxCoeff() <=
          1e-14);
  }

  CHECK_THROWS_WITH_AS(mix(a, make_density(Mat::Identity(3, 3) / 3.0), 0.5),
                       doctest::Contains("DimMismatch"), ValidationError);
}

TEST_CASE("spectral reconstructs, orders, and fixes phases") {
  const DensityMatrix diag = make_density(mat2(0.7, 0, 0, 0.3));
  const Spectrum spec = spectral(diag);
  CHECK(spec.eigenvalues(0) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(spec.eigenvalues(1) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(spec.eigenvectors(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));

  // degenerate: identity/3 has a free eigenbasis, but the contract still
  // gives descending values, orthonormal columns, and fixed phases
  const Spectrum deg = spectral(make_density(Mat::Identity(3, 3) / 3.0));
  for (int j = 0; j < 3; ++j) {
    CHECK(deg.eigenvalues(j) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    int pivot = 0;
    double best = -1.0;
    for (int i = 0; i < 3; ++i)
      if (std::abs(deg.eigenvectors(i, j)) > best) {
        best = std::abs(deg.eigenvectors(i, j));
        pivot = i;
      }
    CHECK(deg.eigenvectors(pivot, j).imag() ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(deg.eigenvectors(pivot, j).real() >= 0.0);
  }
  CHECK((deg.eigenvectors.adjoint() * deg.eigenvectors -
         Mat::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() <= 1e-12);
}

TEST_CASE("spectral properties over random densities") {
  qt::Rng rng(29);
  for (const int dim : {2, 3, 5, 8, 16}) {
    const DensityMatrix rho = qt::random_density(rng, dim);
    const Spectrum spec = spectral(rho);

    for (int j = 1; j < dim; ++j)
      CHECK(spec.eigenvalues(j - 1) >= spec.eigenvalues(j) - 1e-14);
    CHECK(spec.eigenvalues.sum() == doctest::Approx(1.0).epsilon(1e-11));

    const Mat rebuilt = spec.eigenvectors *
                        spec.eigenvalues.cast<cxd>().asDiagonal() *
                        spec.eigenvectors.adjoint();
    CHECK((rebuilt - rho.entries()).norm() <= 1e-10);

    const double p = purity(rho);
    CHECK(p <= 1.0 + 1e-12);
    CHECK(p >= 1.0 / dim - 1e-12);
    CHECK(p == doctest::Approx(spec.eigenvalues.squaredNorm()).epsilon(1e-10));
  }
}

TEST_CASE("principal_state demands purity") {
  const DensityMatrix mixed = make_density(Mat::Identity(2, 2) * 0.5);
  CHECK_THROWS_WITH_AS(principal_state(mixed), doctest::Contains("NotPure"),
                       ValidationError);

  qt::Rng rng(31);
  const StateVector psi = qt::random_state(rng, 6);
  const StateVector back = principal_state(from_state(psi));
  // equal up to a global phase; compare projectors
  const Mat p1 = psi.amplitudes() * psi.amplitudes().adjoint();
  const Mat p2 = back.amplitudes() * back.amplitudes().adjoint();
  CHECK((p1 - p2).cwiseAbs().maxCoeff() <= 1e-12);
}
