#include "qpurify/fourier.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace qpurify {

namespace {

// e^{-2pi i j/n} for j = 0..n-1; exponents are reduced mod n before lookup,
// so each root is computed from its own angle exactly once.
Vec unit_roots(int n) {
  Vec roots(n);
  for (int j = 0; j < n; ++j)
    roots(j) = std::polar(1.0, -kTwoPi * j / n);
  return roots;
}

inline int signed_freq(int k, int n) { return (k <= n / 2) ? k : k - n; }

} // namespace

Vec dft(const Vec &values) {
  const int n = static_cast<int>(values.size());
  const Vec roots = unit_roots(n);
  Vec coeffs(n);
  for (int k = 0; k < n; ++k) {
    cxd acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const long long e = (static_cast<long long>(j) * k) % n;
      acc += values(j) * roots(static_cast<int>(e));
    }
    coeffs(k) = acc;
  }
  return coeffs;
}

Vec refine_periodic(const Vec &values, int factor, double offset) {
  return refine_periodic_coeffs(dft(values), factor, offset);
}

Vec refine_periodic_coeffs(const Vec &raw_coeffs, int factor, double offset) {
  const int n = static_cast<int>(raw_coeffs.size());
  const int total = factor * n;
  const int half = n / 2;
  Vec coeffs = raw_coeffs;

  // A shift by `offset` input-grid units multiplies the coefficient at
  // signed frequency f by e^{2pi i f offset / n}.
  if (offset != 0.0) {
    for (int k = 0; k < n; ++k)
      coeffs(k) *= std::polar(1.0, kTwoPi * signed_freq(k, n) * offset / n);
  }

  // Zero-padded spectrum of length factor*n, kept as a sparse term list.
  // Even n splits the Nyquist bin between +n/2 and -n/2 so the refinement
  // of a real signal stays real.
  std::vector<std::pair<int, cxd>> terms;
  terms.reserve(n + 1);
  for (int k = 0; k < n; ++k) {
    const int f = signed_freq(k, n);
    if (n % 2 == 0 && k == half) {
      terms.emplace_back(half, 0.5 * coeffs(k));
      terms.emplace_back(total - half, 0.5 * coeffs(k));
    } else {
      terms.emplace_back((f + total) % total, coeffs(k));
    }
  }

  const Vec roots = unit_roots(total);
  Vec out(total);
  for (int m = 0; m < total; ++m) {
    cxd acc = 0.0;
    for (const auto &[k, c] : terms) {
      const long long e = (static_cast<long long>(m) * k) % total;
      acc += c * std::conj(roots(static_cast<int>(e)));  // inverse transform
    }
    out(m) = acc / static_cast<double>(n);
  }
  return out;
}

Vec refine(const Vec &values, int factor) {
  const int n = static_cast<int>(values.size());
  return refine_periodic(values, factor, 0.0).head(factor * (n - 1) + 1);
}

FourierSeries::FourierSeries(const Vec &values)
    : coeffs_(dft(values)), n_(static_cast<int>(values.size())) {}

cxd FourierSeries::eval(double t) const {
  const int half = n_ / 2;
  cxd acc = 0.0;
  for (int k = 0; k < n_; ++k) {
    const cxd c = coeffs_(k);
    if (n_ % 2 == 0 && k == half) {
      // split Nyquist bin: average the +n/2 and -n/2 exponentials
      acc += c * 0.5 *
             (std::polar(1.0, kTwoPi * half * t / n_) +
              std::polar(1.0, -kTwoPi * half * t / n_));
    } else {
      acc += c * std::polar(1.0, kTwoPi * signed_freq(k, n_) * t / n_);
    }
  }
  return acc / static_cast<double>(n_);
}

} // namespace qpurify
