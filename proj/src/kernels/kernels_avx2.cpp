// AVX2/FMA variants. This translation unit is the only one compiled with
// -mavx2 -mfma; callers reach it through the dispatcher in kernels.cpp.

#include "qpurify/kernels.hpp"

#include <cmath>
#include <immintrin.h>

namespace qpurify::kernels::avx2 {

namespace {

// Lane order matters for nothing except determinism: always 0+1+2+3.
inline double hsum(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

} // namespace

void weighted_sum3(double a, const double *x, double b, const double *y,
                   double c, const double *z, double *out, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_mul_pd(vc, _mm256_loadu_pd(z + i));
    acc = _mm256_fmadd_pd(vb, _mm256_loadu_pd(y + i), acc);
    acc = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), acc);
    _mm256_storeu_pd(out + i, acc);
  }
  for (; i < n; ++i)
    out[i] = std::fma(a, x[i], std::fma(b, y[i], c * z[i]));
}

void rotate_real(double c, double s, const double *re, const double *im,
                 double *out, std::size_t n) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_mul_pd(vc, _mm256_loadu_pd(re + i));
    acc = _mm256_fnmadd_pd(vs, _mm256_loadu_pd(im + i), acc);
    _mm256_storeu_pd(out + i, acc);
  }
  for (; i < n; ++i)
    out[i] = std::fma(-s, im[i], c * re[i]);
}

double sum_squares(const double *x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double total = hsum(acc);
  for (; i < n; ++i)
    total = std::fma(x[i], x[i], total);
  return total;
}

void phase_dot(const double *gr, const double *gi, const double *c,
               const double *s, std::size_t n, double &out_re,
               double &out_im) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d vgr = _mm256_loadu_pd(gr + k);
    const __m256d vgi = _mm256_loadu_pd(gi + k);
    const __m256d vc = _mm256_loadu_pd(c + k);
    const __m256d vs = _mm256_loadu_pd(s + k);
    acc_re = _mm256_fmadd_pd(vgr, vc, _mm256_fmadd_pd(vgi, vs, acc_re));
    acc_im = _mm256_fmadd_pd(vgi, vc, _mm256_fnmadd_pd(vgr, vs, acc_im));
  }
  double re = hsum(acc_re);
  double im = hsum(acc_im);
  for (; k < n; ++k) {
    re = std::fma(gr[k], c[k], std::fma(gi[k], s[k], re));
    im = std::fma(gi[k], c[k], std::fma(-gr[k], s[k], im));
  }
  out_re = re;
  out_im = im;
}

} // namespace qpurify::kernels::avx2
