#include "stirval/numeric.hpp"

namespace stirval {

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class gen_binomial(std::int64_t s, unsigned long d) {
  if (d == 0) return 1;
  if (s >= 0) {
    if (static_cast<std::uint64_t>(s) < d) return 0;
    return binomial(static_cast<unsigned long>(s), d);
  }
  mpz_class r = binomial(static_cast<unsigned long>(d - s - 1), d);
  return (d % 2 == 0) ? r : mpz_class(-r);
}

mpz_class falling_factorial(unsigned long n, unsigned long w) {
  mpz_class r = 1;
  for (unsigned long i = 0; i < w; ++i) r *= (n - i);
  return r;
}

mpz_class pow_ui(unsigned long p, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

}  // namespace stirval
