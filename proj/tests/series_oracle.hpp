#pragma once

// Test-only oracle: exact rational power series for (t/(e^t-1))^l, entirely
// independent of the partition-sum implementation it is used to check.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace series_oracle {

using Series = std::vector<mpq_class>;  // coefficient of t^i at index i

inline Series mul(const Series& a, const Series& b) {
  const std::size_t n = a.size();
  Series c(n, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (b[j] != 0) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline Series inverse(const Series& a) {
  const std::size_t n = a.size();
  Series c(n, mpq_class(0));
  c[0] = 1 / a[0];
  for (std::size_t m = 1; m < n; ++m) {
    mpq_class s = 0;
    for (std::size_t i = 1; i <= m; ++i) s += a[i] * c[m - i];
    c[m] = -s / a[0];
  }
  return c;
}

inline Series power(Series base, long e) {
  const std::size_t n = base.size();
  if (e < 0) {
    base = inverse(base);
    e = -e;
  }
  Series r(n, mpq_class(0));
  r[0] = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

/// B_n^{(l)} for n = 0..N, read off the exponential generating function.
inline std::vector<mpq_class> hob_row(long l, std::size_t N) {
  Series f(N + 1);  // (e^t - 1)/t
  mpz_class fact = 1;
  for (std::size_t i = 0; i <= N; ++i) {
    fact *= static_cast<unsigned long>(i + 1);
    f[i] = mpq_class(1, fact);
  }
  Series g = power(f, -l);  // (t/(e^t-1))^l
  std::vector<mpq_class> out(N + 1);
  mpz_class nfact = 1;
  for (std::size_t n = 0; n <= N; ++n) {
    if (n > 0) nfact *= static_cast<unsigned long>(n);
    out[n] = g[n] * mpq_class(nfact);
  }
  return out;
}

}  // namespace series_oracle
