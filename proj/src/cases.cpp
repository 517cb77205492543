#include "stirval/cases.hpp"

#include <bit>
#include <stdexcept>

#include "stirval/basep.hpp"
#include "stirval/poles.hpp"

namespace stirval {

namespace {

long ceil_div(long num, long den) {
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

void check_pair(unsigned long n, unsigned long k, unsigned long p) {
  require_prime(p);
  if (k < 1 || k > n) throw std::domain_error("need 1 <= k <= n");
}

bool divisible(unsigned long n, unsigned long k, unsigned long p) {
  return (n - k) % (p - 1) == 0;
}

long vp(std::uint64_t x, unsigned long p) { return int_valuation(x, p).value(); }

// nu_2(binom(a+b, a)) == #([a] & [b]): every carry is forced by a shared bit.
bool no_unforced_carries(std::uint64_t a, std::uint64_t b) {
  return carries(a, b, 2) == static_cast<unsigned long>(std::popcount(a & b));
}

}  // namespace

EstimateSet estimates_second(unsigned long n, unsigned long k, unsigned long p) {
  check_pair(n, k, p);
  const long den = static_cast<long>(p) - 1;
  EstimateSet e;
  e.mz_raw = {static_cast<long>(digit_sum(std::uint64_t(k), p)) -
                  static_cast<long>(digit_sum(std::uint64_t(n), p)),
              den};
  e.smz_raw = {static_cast<long>(digit_sum(std::uint64_t(k - 1), p)) -
                   static_cast<long>(digit_sum(std::uint64_t(n - 1), p)),
               den};
  e.mz_integral = divisible(n, k, p);
  e.smz_integral = e.mz_integral;  // n-1 and k-1 differ by the same n-k
  e.mz = ceil_div(e.mz_raw.num, den);
  e.smz = ceil_div(e.smz_raw.num, den);
  if (p == 2) {
    e.pole = static_cast<long>(max_pole_2_second_kind(n, k));
    e.shifted_pole = static_cast<long>(max_pole_2_second_kind_shifted(n, k));
  } else {
    e.pole = static_cast<long>(max_pole(n - k, -static_cast<std::int64_t>(k), p));
    e.shifted_pole =
        static_cast<long>(max_pole(n - k, -static_cast<std::int64_t>(k) + 1, p));
  }
  e.amz = static_cast<long>(binom_valuation(n, k, p)) - e.pole;
  e.samz = static_cast<long>(binom_valuation(n - 1, k - 1, p)) - e.shifted_pole;
  return e;
}

EstimateSet estimates_first(unsigned long n, unsigned long k, unsigned long p) {
  check_pair(n, k, p);
  const long den = static_cast<long>(p) - 1;
  EstimateSet e;
  e.mz_raw = {static_cast<long>(digit_sum(std::uint64_t(k - 1), p)) -
                  static_cast<long>(digit_sum(std::uint64_t(n - 1), p)),
              den};
  e.smz_raw = {static_cast<long>(digit_sum(std::uint64_t(k), p)) -
                   static_cast<long>(digit_sum(std::uint64_t(n), p)),
               den};
  e.mz_integral = divisible(n, k, p);
  e.smz_integral = e.mz_integral;
  e.mz = ceil_div(e.mz_raw.num, den);
  e.smz = ceil_div(e.smz_raw.num, den);
  if (p == 2) {
    e.pole = static_cast<long>(max_pole_2_first_kind(n, k));
    e.shifted_pole = static_cast<long>(max_pole_2_first_kind_shifted(n, k));
  } else {
    e.pole = static_cast<long>(max_pole(n - k, static_cast<std::int64_t>(n), p));
    e.shifted_pole = static_cast<long>(max_pole(n - k, static_cast<std::int64_t>(n) + 1, p));
  }
  e.amz = static_cast<long>(binom_valuation(n - 1, k - 1, p)) - e.pole;
  e.samz = static_cast<long>(binom_valuation(n, k, p)) - e.shifted_pole;
  return e;
}

bool is_mzc_second(unsigned long n, unsigned long k, unsigned long p) {
  check_pair(n, k, p);
  if (!divisible(n, k, p)) return false;
  return carries((n - k) / (p - 1), std::uint64_t(n), p) == 0;
}

bool is_smzc_second(unsigned long n, unsigned long k, unsigned long p) {
  check_pair(n, k, p);
  if (!divisible(n, k, p)) return false;
  return carries((n - k) / (p - 1), std::uint64_t(n - 1), p) == 0;
}

bool is_mzc_first(unsigned long n, unsigned long k, unsigned long p) {
  check_pair(n, k, p);
  if (!divisible(n, k, p)) return false;
  return gen_binom_valuation(static_cast<std::int64_t>(k) - 1, (n - k) / (p - 1), p) ==
         Valuation(0);
}

bool is_smzc_first(unsigned long n, unsigned long k, unsigned long p) {
  check_pair(n, k, p);
  if (!divisible(n, k, p)) return false;
  return gen_binom_valuation(static_cast<std::int64_t>(k), (n - k) / (p - 1), p) ==
         Valuation(0);
}

Criterion amzc_criterion_second(unsigned long n, unsigned long k, unsigned long p) {
  check_pair(n, k, p);
  if (!divisible(n, k, p)) return Criterion::Inapplicable;
  if (!(int_valuation(std::uint64_t(k), p) <= int_valuation(std::uint64_t(n), p)))
    return Criterion::Inapplicable;
  const std::uint64_t deg = n - k;
  if (p != 2) {
    const std::uint64_t r = deg / (p - 1);
    const long m = static_cast<long>(max_pole(deg, -static_cast<std::int64_t>(k), p));
    const long want = static_cast<long>(digit_sum(deg, p) / (p - 1)) - m;
    return static_cast<long>(carries(std::uint64_t(n), r, p)) == want ? Criterion::True
                                                                      : Criterion::False;
  }
  // p = 2: exactly one of the two weight-(n-k) canonical partitions works,
  // stated through unforced-carry conditions.
  const bool first = no_unforced_carries(n, deg);
  const bool third = (k % 2 == 1) && (n % 2 == 0) && deg >= 3 &&
                     vp(deg - 1, 2) == vp(n, 2) && no_unforced_carries(n, deg - 2);
  return (first != third) ? Criterion::True : Criterion::False;
}

Criterion samzc_criterion_second(unsigned long n, unsigned long k, unsigned long p) {
  check_pair(n, k, p);
  if (!divisible(n, k, p)) return Criterion::Inapplicable;
  if (k == 1) return Criterion::True;  // S(n,1) = 1, shifted estimate is 0
  return amzc_criterion_second(n - 1, k - 1, p);
}

Criterion amzc_criterion_first(unsigned long n, unsigned long k, unsigned long p) {
  check_pair(n, k, p);
  if (!divisible(n, k, p)) return Criterion::Inapplicable;
  const std::uint64_t deg = n - k;
  const std::int64_t km1 = static_cast<std::int64_t>(k) - 1;
  if (p != 2) {
    if (!(int_valuation(std::uint64_t(n), p) <= int_valuation(std::uint64_t(k), p)))
      return Criterion::Inapplicable;
    const std::uint64_t r = deg / (p - 1);
    const long m = static_cast<long>(max_pole(deg, static_cast<std::int64_t>(n), p));
    const Valuation want(static_cast<long>(digit_sum(deg, p) / (p - 1)) - m);
    return gen_binom_valuation(km1, r, p) == want ? Criterion::True : Criterion::False;
  }
  const long m = static_cast<long>(max_pole_2_first_kind(n, k));
  const long sigma = static_cast<long>(digit_sum(deg, 2));
  int hits = 0;
  if (gen_binom_valuation(km1, deg, 2) == Valuation(sigma - m)) ++hits;
  if (deg >= 1 && gen_binom_valuation(km1, deg - 1, 2) == Valuation(sigma - m - 1)) ++hits;
  if (deg >= 3 && deg % 2 == 1 &&
      gen_binom_valuation(km1, deg - 2, 2) == Valuation(sigma - m - 1))
    ++hits;
  return hits == 1 ? Criterion::True : Criterion::False;
}

Criterion samzc_criterion_first(unsigned long n, unsigned long k, unsigned long p) {
  check_pair(n, k, p);
  if (!divisible(n, k, p)) return Criterion::Inapplicable;
  const std::uint64_t deg = n - k;
  if (p != 2) {
    const std::uint64_t r = deg / (p - 1);
    const long m = static_cast<long>(max_pole(deg, static_cast<std::int64_t>(n) + 1, p));
    const Valuation want(static_cast<long>(digit_sum(deg, p) / (p - 1)) - m);
    return gen_binom_valuation(static_cast<std::int64_t>(k), r, p) == want
               ? Criterion::True
               : Criterion::False;
  }
  const long m = static_cast<long>(max_pole_2_first_kind_shifted(n, k));
  const long sigma = static_cast<long>(digit_sum(deg, 2));
  int hits = 0;
  if (gen_binom_valuation(static_cast<std::int64_t>(k), deg, 2) == Valuation(sigma - m))
    ++hits;
  if (deg >= 3 && deg % 2 == 1 &&
      gen_binom_valuation(static_cast<std::int64_t>(k), deg - 2, 2) ==
          Valuation(sigma - m - 1))
    ++hits;
  return hits == 1 ? Criterion::True : Criterion::False;
}

CaseReport classify_with_actual(unsigned long n, unsigned long k, unsigned long p,
                                StirlingKind kind, Valuation actual) {
  check_pair(n, k, p);
  CaseReport report;
  report.n = n;
  report.k = k;
  report.p = p;
  report.kind = kind;
  if ((n - k) % (p - 1) == 0) report.r = (n - k) / (p - 1);
  report.estimates = kind == StirlingKind::Second ? estimates_second(n, k, p)
                                                  : estimates_first(n, k, p);
  report.actual = actual;

  const EstimateSet& e = report.estimates;
  report.sharp.mzc = e.mz_integral && actual == e.mz;
  report.sharp.smzc = e.smz_integral && actual == e.smz;
  report.sharp.amzc = actual == e.amz;
  report.sharp.samzc = actual == e.samz;

  if (kind == StirlingKind::Second) {
    report.criteria.mzc = is_mzc_second(n, k, p) ? Criterion::True : Criterion::False;
    report.criteria.smzc = is_smzc_second(n, k, p) ? Criterion::True : Criterion::False;
    report.criteria.amzc = amzc_criterion_second(n, k, p);
    report.criteria.samzc = samzc_criterion_second(n, k, p);
  } else {
    report.criteria.mzc = is_mzc_first(n, k, p) ? Criterion::True : Criterion::False;
    report.criteria.smzc = is_smzc_first(n, k, p) ? Criterion::True : Criterion::False;
    report.criteria.amzc = amzc_criterion_first(n, k, p);
    report.criteria.samzc = samzc_criterion_first(n, k, p);
  }

  auto agrees = [](Criterion c, bool sharp) {
    return c == Criterion::Inapplicable || (c == Criterion::True) == sharp;
  };
  report.agreement = agrees(report.criteria.mzc, report.sharp.mzc) &&
                     agrees(report.criteria.smzc, report.sharp.smzc) &&
                     agrees(report.criteria.amzc, report.sharp.amzc) &&
                     agrees(report.criteria.samzc, report.sharp.samzc);
  return report;
}

CaseReport classify(unsigned long n, unsigned long k, unsigned long p, StirlingKind kind,
                    const StirlingLimits& limits) {
  return classify_with_actual(n, k, p, kind, stirling_valuation(n, k, p, kind, limits));
}

bool amdeberhan_check(unsigned long n, unsigned long k, unsigned long p, StirlingKind kind,
                      const StirlingLimits& limits) {
  require_prime(p);
  if (kind == StirlingKind::Second) {
    return stirling_valuation(n + 1, k + 1, p, kind, limits) ==
           stirling_valuation(n, k, p, kind, limits);
  }
  if (n < 1 || k < 1) throw std::domain_error("amdeberhan_check: need n, k >= 1");
  return stirling_valuation(n, k, p, kind, limits) ==
         stirling_valuation(n - 1, k - 1, p, kind, limits);
}

}  // namespace stirval
