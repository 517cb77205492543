#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "stirval/valuation.hpp"

namespace stirval {

bool is_prime(unsigned long p);

/// Throws std::domain_error unless p is prime.
void require_prime(unsigned long p);

/// An integer together with its base-p digit vector.
/// digits[i] is the coefficient of p^i (little-endian); no trailing zeros,
/// so digits is empty exactly when value == 0.
struct BasePExpansion {
  unsigned long p = 2;
  mpz_class value;
  std::vector<std::uint32_t> digits;

  unsigned long digit_sum() const;
  /// Position of the lowest nonzero digit, i.e. nu_p(value); -1 for value 0.
  long low_position() const;
  std::uint32_t digit(std::size_t i) const {
    return i < digits.size() ? digits[i] : 0;
  }
};

BasePExpansion expand(const mpz_class& n, unsigned long p);
BasePExpansion expand(std::uint64_t n, unsigned long p);

enum class SegmentKind { Bottom, Top, General };

/// A contiguous digit-window subsum of a parent expansion.  The two end
/// digits may be partial (strictly below the parent's digit); a segment is
/// closed when both ends take the parent's full digit.  Bottom segments start
/// at the parent's lowest nonzero position, top segments reach its highest.
struct Segment {
  BasePExpansion parent;
  mpz_class value;
  SegmentKind kind = SegmentKind::General;
  bool closed = true;
};

/// Classifies value as a segment of the parent; throws std::domain_error when
/// the digits of value do not form a contiguous (possibly partial-ended)
/// window of the parent's digits.
Segment make_segment(const BasePExpansion& parent, const mpz_class& value);

unsigned long digit_sum(std::uint64_t n, unsigned long p);
unsigned long digit_sum(const mpz_class& n, unsigned long p);

Valuation int_valuation(std::uint64_t n, unsigned long p);
Valuation int_valuation(const mpz_class& n, unsigned long p);

/// Valuation of an exact rational (numerator minus denominator valuation).
Valuation rational_valuation(const mpq_class& q, unsigned long p);

/// Number of carries when adding a and b in base p.  Equals
/// nu_p(binom(a+b, a)) by Kummer and (s_p(a)+s_p(b)-s_p(a+b))/(p-1) by Legendre.
unsigned long carries(std::uint64_t a, std::uint64_t b, unsigned long p);
unsigned long carries(const mpz_class& a, const mpz_class& b, unsigned long p);

/// nu_p(binom(m, j)) for 0 <= j <= m.  Throws std::domain_error when j > m:
/// vanishing binomials must be handled explicitly by the caller.
unsigned long binom_valuation(std::uint64_t m, std::uint64_t j, unsigned long p);

/// nu_p(binom(s, d)) for the generalized binomial with integer s (s may be
/// negative).  Returns infinity when the binomial vanishes (0 <= s < d).
Valuation gen_binom_valuation(std::int64_t s, std::uint64_t d, unsigned long p);

/// nu_p(n!) by Legendre's formula (n - s_p(n))/(p-1).
std::uint64_t factorial_valuation(std::uint64_t n, unsigned long p);

/// Least bottom segment of n with digit sum exactly `target`: digits are
/// consumed from position nu_p(n) upward, taking a partial count of the
/// topmost consumed digit when needed.  nullopt when s_p(n) < target.
std::optional<std::uint64_t> bottom_segment_with_sum(std::uint64_t n, unsigned long p,
                                                     unsigned long target);

/// Bottom segment of n consisting of the lowest `units` digit units; nullopt
/// when s_p(n) < units.  bottom_units(n, p, digit_sum(n, p)) == n.
std::optional<std::uint64_t> bottom_units(std::uint64_t n, unsigned long p,
                                          unsigned long units);

/// True when b is a bottom segment of n: the digits of b sit at or below the
/// digits of n - b, with at most one shared position, and sum digit-wise to n.
bool is_bottom_segment(std::uint64_t b, std::uint64_t n, unsigned long p);

/// k' with k = k' (mod m) and 1 <= k' <= m.
std::uint64_t least_positive_residue(std::uint64_t k, std::uint64_t m);

/// The 2-powers appearing in the binary expansion of n, ascending.
std::vector<std::uint64_t> two_power_set(std::uint64_t n);

}  // namespace stirval
