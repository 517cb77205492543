#pragma once

#include <cstdint>
#include <optional>

#include "stirval/stirling.hpp"
#include "stirval/valuation.hpp"

namespace stirval {

/// Exact rational lower bound num/den (den = p-1); kept alongside the
/// rounded-up integer bound when p-1 does not divide the digit difference.
struct RawBound {
  long num = 0;
  long den = 1;
};

/// The four valuation lower bounds for one Stirling number.  mz and smz may
/// be negative; amz and samz never are.
struct EstimateSet {
  long mz = 0;
  long smz = 0;
  long amz = 0;
  long samz = 0;
  bool mz_integral = true;   // p-1 divides n-k
  bool smz_integral = true;
  RawBound mz_raw, smz_raw;
  long pole = 0;          // M, maximum pole of the associated polynomial
  long shifted_pole = 0;  // M', maximum pole of the shifted companion
};

enum class Criterion { False, True, Inapplicable };

struct CaseFlags {
  bool mzc = false, smzc = false, amzc = false, samzc = false;
};

struct CriterionFlags {
  Criterion mzc = Criterion::False;
  Criterion smzc = Criterion::False;
  Criterion amzc = Criterion::Inapplicable;
  Criterion samzc = Criterion::Inapplicable;
};

/// Everything known about one (n, k, p, kind): the four estimates, the true
/// valuation, which estimates are sharp, and what the case criteria say.
struct CaseReport {
  unsigned long n = 0, k = 0, p = 2;
  StirlingKind kind = StirlingKind::Second;
  std::optional<unsigned long> r;  // (n-k)/(p-1) when integral
  EstimateSet estimates;
  Valuation actual;
  CaseFlags sharp;           // oracle comparison: estimate == actual
  CriterionFlags criteria;   // decided by the criteria alone, no oracle
  bool agreement = true;     // criteria match sharpness wherever applicable
};

EstimateSet estimates_second(unsigned long n, unsigned long k, unsigned long p);
EstimateSet estimates_first(unsigned long n, unsigned long k, unsigned long p);

/// Minimum-zero / shifted-minimum-zero criteria.  False when p-1 does not
/// divide n-k (the estimate is then fractional and cannot be attained).
bool is_mzc_second(unsigned long n, unsigned long k, unsigned long p);
bool is_smzc_second(unsigned long n, unsigned long k, unsigned long p);
bool is_mzc_first(unsigned long n, unsigned long k, unsigned long p);
bool is_smzc_first(unsigned long n, unsigned long k, unsigned long p);

/// Almost-minimum-zero criteria; Inapplicable when the hypotheses
/// (divisibility, valuation ordering) fail rather than silently false.
Criterion amzc_criterion_second(unsigned long n, unsigned long k, unsigned long p);
Criterion samzc_criterion_second(unsigned long n, unsigned long k, unsigned long p);
Criterion amzc_criterion_first(unsigned long n, unsigned long k, unsigned long p);
Criterion samzc_criterion_first(unsigned long n, unsigned long k, unsigned long p);

CaseReport classify(unsigned long n, unsigned long k, unsigned long p, StirlingKind kind,
                    const StirlingLimits& limits = {});

/// Like classify, but with the true valuation supplied by the caller (for
/// batched scans that already hold it).
CaseReport classify_with_actual(unsigned long n, unsigned long k, unsigned long p,
                                StirlingKind kind, Valuation actual);

/// Amdeberhan-type identity: second kind compares nu_p(S(n+1,k+1)) with
/// nu_p(S(n,k)); first kind compares nu_p(s(n,k)) with nu_p(s(n-1,k-1)).
bool amdeberhan_check(unsigned long n, unsigned long k, unsigned long p, StirlingKind kind,
                      const StirlingLimits& limits = {});

}  // namespace stirval
