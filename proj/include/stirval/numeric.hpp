#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace stirval {

mpz_class factorial(unsigned long n);

/// binom(n, k) for ordinary nonnegative n.
mpz_class binomial(unsigned long n, unsigned long k);

/// Generalized binom(s, d) = s(s-1)...(s-d+1)/d! for any integer s.  For
/// negative s this is (-1)^d binom(d-s-1, d), computed in exact integers.
mpz_class gen_binomial(std::int64_t s, unsigned long d);

/// Falling factorial (n)_w = n! / (n-w)!.
mpz_class falling_factorial(unsigned long n, unsigned long w);

/// p^e as an exact integer.
mpz_class pow_ui(unsigned long p, unsigned long e);

}  // namespace stirval
