#pragma once

#include <cstddef>

namespace qpurify::kernels {

enum class Backend { Scalar, Avx2 };

// Backend chosen at first use: QPURIFY_SIMD=scalar|avx2|auto (default auto,
// which takes AVX2 when the CPU supports it). A request for an unavailable
// backend falls back to scalar; active() always reports what actually runs.
Backend active();
const char *backend_name(Backend backend);
bool avx2_supported();

// out[i] = a*x[i] + b*y[i] + c*z[i]
void weighted_sum3(double a, const double *x, double b, const double *y,
                   double c, const double *z, double *out, std::size_t n);

// out[i] = c*re[i] - s*im[i], i.e. Re(e^{i angle} (re + i im)) for
// c = cos(angle), s = sin(angle)
void rotate_real(double c, double s, const double *re, const double *im,
                 double *out, std::size_t n);

double sum_squares(const double *x, std::size_t n);

// (out_re + i out_im) = sum_k (gr[k] + i gi[k]) * (c[k] - i s[k]).
// The phase-table reduction behind every transform in the library.
void phase_dot(const double *gr, const double *gi, const double *c,
               const double *s, std::size_t n, double &out_re,
               double &out_im);

// Reference implementations, always available. The pointwise kernels use
// std::fma in the exact lane order of the AVX2 variants, so those pairs are
// bit-identical; the reductions accumulate in a different order and agree
// only to rounding.
namespace scalar {
void weighted_sum3(double a, const double *x, double b, const double *y,
                   double c, const double *z, double *out, std::size_t n);
void rotate_real(double c, double s, const double *re, const double *im,
                 double *out, std::size_t n);
double sum_squares(const double *x, std::size_t n);
void phase_dot(const double *gr, const double *gi, const double *c,
               const double *s, std::size_t n, double &out_re,
               double &out_im);
} // namespace scalar

#if defined(QPURIFY_HAVE_AVX2)
namespace avx2 {
void weighted_sum3(double a, const double *x, double b, const double *y,
                   double c, const double *z, double *out, std::size_t n);
void rotate_real(double c, double s, const double *re, const double *im,
                 double *out, std::size_t n);
double sum_squares(const double *x, std::size_t n);
void phase_dot(const double *gr, const double *gi, const double *c,
               const double *s, std::size_t n, double &out_re,
               double &out_im);
} // namespace avx2
#endif

} // namespace qpurify::kernels
