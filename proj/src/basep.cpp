#include "stirval/basep.hpp"

#include <bit>
#include <stdexcept>

namespace stirval {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(unsigned long p) {
  if (!is_prime(p)) throw std::domain_error("base must be prime, got " + std::to_string(p));
}

unsigned long BasePExpansion::digit_sum() const {
  unsigned long s = 0;
  for (auto d : digits) s += d;
  return s;
}

long BasePExpansion::low_position() const {
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (digits[i] != 0) return static_cast<long>(i);
  return -1;
}

BasePExpansion expand(const mpz_class& n, unsigned long p) {
  require_prime(p);
  if (n < 0) throw std::domain_error("expand: negative value");
  BasePExpansion e;
  e.p = p;
  e.value = n;
  mpz_class rest = n;
  while (rest > 0) {
    e.digits.push_back(static_cast<std::uint32_t>(mpz_fdiv_ui(rest.get_mpz_t(), p)));
    mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
  }
  return e;
}

BasePExpansion expand(std::uint64_t n, unsigned long p) {
  require_prime(p);
  BasePExpansion e;
  e.p = p;
  e.value = mpz_class(static_cast<unsigned long>(n));
  for (std::uint64_t rest = n; rest > 0; rest /= p)
    e.digits.push_back(static_cast<std::uint32_t>(rest % p));
  return e;
}

Segment make_segment(const BasePExpansion& parent, const mpz_class& value) {
  if (value < 0 || value > parent.value)
    throw std::domain_error("make_segment: value out of range");
  const BasePExpansion v = expand(value, parent.p);
  const long lo = v.low_position();
  const long hi = static_cast<long>(v.digits.size()) - 1;
  for (long i = lo; i >= 0 && i <= hi; ++i) {
    const std::uint32_t dv = v.digit(i), dp = parent.digit(i);
    if (dv > dp) throw std::domain_error("make_segment: digit exceeds parent digit");
    if (i != lo && i != hi && dv != dp)
      throw std::domain_error("make_segment: interior digit reduced");
  }
  Segment s;
  s.parent = parent;
  s.value = value;
  if (value == 0) return s;
  s.closed = v.digit(lo) == parent.digit(lo) && v.digit(hi) == parent.digit(hi);
  if (lo == parent.low_position())
    s.kind = SegmentKind::Bottom;
  else if (hi == static_cast<long>(parent.digits.size()) - 1)
    s.kind = SegmentKind::Top;
  else
    s.kind = SegmentKind::General;
  return s;
}

unsigned long digit_sum(std::uint64_t n, unsigned long p) {
  require_prime(p);
  unsigned long s = 0;
  for (; n > 0; n /= p) s += n % p;
  return s;
}

unsigned long digit_sum(const mpz_class& n, unsigned long p) {
  require_prime(p);
  if (n < 0) throw std::domain_error("digit_sum: negative value");
  mpz_class rest = n;
  unsigned long s = 0;
  while (rest > 0) {
    s += mpz_fdiv_ui(rest.get_mpz_t(), p);
    mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
  }
  return s;
}

Valuation int_valuation(std::uint64_t n, unsigned long p) {
  require_prime(p);
  if (n == 0) return Valuation::infinity();
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return Valuation(v);
}

Valuation int_valuation(const mpz_class& n, unsigned long p) {
  require_prime(p);
  if (n == 0) return Valuation::infinity();
  mpz_class abs_n = abs(n);
  mpz_class tmp;
  long v = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), abs_n.get_mpz_t(), mpz_class(p).get_mpz_t()));
  return Valuation(v);
}

Valuation rational_valuation(const mpq_class& q, unsigned long p) {
  if (q == 0) return Valuation::infinity();
  Valuation num = int_valuation(mpz_class(q.get_num()), p);
  Valuation den = int_valuation(mpz_class(q.get_den()), p);
  return Valuation(num.value() - den.value());
}

unsigned long carries(std::uint64_t a, std::uint64_t b, unsigned long p) {
  require_prime(p);
  unsigned long count = 0;
  unsigned long carry = 0;
  while (a > 0 || b > 0 || carry > 0) {
    unsigned long s = a % p + b % p + carry;
    carry = s >= p ? 1 : 0;
    count += carry;
    a /= p;
    b /= p;
  }
  return count;
}

unsigned long carries(const mpz_class& a, const mpz_class& b, unsigned long p) {
  require_prime(p);
  if (a < 0 || b < 0) throw std::domain_error("carries: negative value");
  // Legendre form: (s_p(a) + s_p(b) - s_p(a+b)) / (p-1).
  unsigned long sa = digit_sum(a, p), sb = digit_sum(b, p), sab = digit_sum(mpz_class(a + b), p);
  return (sa + sb - sab) / (p - 1);
}

unsigned long binom_valuation(std::uint64_t m, std::uint64_t j, unsigned long p) {
  if (j > m) throw std::domain_error("binom_valuation: j > m (vanishing binomial)");
  return carries(j, m - j, p);
}

Valuation gen_binom_valuation(std::int64_t s, std::uint64_t d, unsigned long p) {
  if (d == 0) return Valuation(0);
  if (s >= 0) {
    auto us = static_cast<std::uint64_t>(s);
    if (d > us) return Valuation::infinity();
    return Valuation(static_cast<long>(carries(d, us - d, p)));
  }
  // binom(s, d) = (-1)^d binom(d - s - 1, d) for s < 0.
  auto top = static_cast<std::uint64_t>(-s) - 1;
  return Valuation(static_cast<long>(carries(d, top, p)));
}

std::uint64_t factorial_valuation(std::uint64_t n, unsigned long p) {
  return (n - digit_sum(n, p)) / (p - 1);
}

std::optional<std::uint64_t> bottom_units(std::uint64_t n, unsigned long p,
                                          unsigned long units) {
  require_prime(p);
  if (units == 0) return 0;
  std::uint64_t val = 0, pw = 1;
  for (std::uint64_t rest = n; rest > 0; rest /= p, pw *= p) {
    unsigned long digit = rest % p;
    unsigned long take = digit < units ? digit : units;
    val += take * pw;
    units -= take;
    if (units == 0) return val;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> bottom_segment_with_sum(std::uint64_t n, unsigned long p,
                                                     unsigned long target) {
  return bottom_units(n, p, target);
}

bool is_bottom_segment(std::uint64_t b, std::uint64_t n, unsigned long p) {
  require_prime(p);
  if (b > n) return false;
  std::uint64_t top = n - b;
  bool seen_top = false;
  while (b > 0 || top > 0) {
    unsigned long db = b % p, dt = top % p;
    if (db + dt >= p) return false;  // digits must sum without carry
    if (seen_top && db != 0) return false;
    if (dt != 0) seen_top = true;
    b /= p;
    top /= p;
  }
  return true;
}

std::uint64_t least_positive_residue(std::uint64_t k, std::uint64_t m) {
  if (k == 0 || m == 0) throw std::domain_error("least_positive_residue: arguments must be >= 1");
  std::uint64_t r = k % m;
  return r == 0 ? m : r;
}

std::vector<std::uint64_t> two_power_set(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  out.reserve(std::popcount(n));
  for (; n > 0; n &= n - 1) out.push_back(n & ~(n - 1));
  return out;
}

}  // namespace stirval
