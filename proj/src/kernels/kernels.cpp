#include "qpurify/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace qpurify::kernels {

namespace scalar {

void weighted_sum3(double a, const double *x, double b, const double *y,
                   double c, const double *z, double *out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::fma(a, x[i], std::fma(b, y[i], c * z[i]));
}

void rotate_real(double c, double s, const double *re, const double *im,
                 double *out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::fma(-s, im[i], c * re[i]);
}

double sum_squares(const double *x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc = std::fma(x[i], x[i], acc);
  return acc;
}

void phase_dot(const double *gr, const double *gi, const double *c,
               const double *s, std::size_t n, double &out_re,
               double &out_im) {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    re = std::fma(gr[k], c[k], std::fma(gi[k], s[k], re));
    im = std::fma(gi[k], c[k], std::fma(-gr[k], s[k], im));
  }
  out_re = re;
  out_im = im;
}

} // namespace scalar

bool avx2_supported() {
#if defined(QPURIFY_HAVE_AVX2)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Backend resolve_backend() {
  const char *env = std::getenv("QPURIFY_SIMD");
  if (env != nullptr) {
    if (std::strcmp(env, "scalar") == 0)
      return Backend::Scalar;
    if (std::strcmp(env, "avx2") == 0)
      return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
    // anything else, including "auto", falls through
  }
  return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
}

Backend cached_backend() {
  static const Backend backend = resolve_backend();
  return backend;
}

} // namespace

Backend active() { return cached_backend(); }

const char *backend_name(Backend backend) {
  switch (backend) {
  case Backend::Avx2:
    return "avx2";
  case Backend::Scalar:
  default:
    return "scalar";
  }
}

void weighted_sum3(double a, const double *x, double b, const double *y,
                   double c, const double *z, double *out, std::size_t n) {
#if defined(QPURIFY_HAVE_AVX2)
  if (active() == Backend::Avx2) {
    avx2::weighted_sum3(a, x, b, y, c, z, out, n);
    return;
  }
#endif
  scalar::weighted_sum3(a, x, b, y, c, z, out, n);
}

void rotate_real(double c, double s, const double *re, const double *im,
                 double *out, std::size_t n) {
#if defined(QPURIFY_HAVE_AVX2)
  if (active() == Backend::Avx2) {
    avx2::rotate_real(c, s, re, im, out, n);
    return;
  }
#endif
  scalar::rotate_real(c, s, re, im, out, n);
}

double sum_squares(const double *x, std::size_t n) {
#if defined(QPURIFY_HAVE_AVX2)
  if (active() == Backend::Avx2)
    return avx2::sum_squares(x, n);
#endif
  return scalar::sum_squares(x, n);
}

void phase_dot(const double *gr, const double *gi, const double *c,
               const double *s, std::size_t n, double &out_re,
               double &out_im) {
#if defined(QPURIFY_HAVE_AVX2)
  if (active() == Backend::Avx2) {
    avx2::phase_dot(gr, gi, c, s, n, out_re, out_im);
    return;
  }
#endif
  scalar::phase_dot(gr, gi, c, s, n, out_re, out_im);
}

} // namespace qpurify::kernels
