#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stirval/stirling.hpp"

namespace stirval {

enum class PredictionKind {
  Exact,       // predicted valuation, guaranteed
  LowerBound,  // predicted lower bound only
  LimitOnly,   // limit value whose attainment bound is not met; not asserted
};

/// One theorem applied to one Stirling number: an applicability certificate
/// and, when applicable, the predicted valuation or bound.
struct TheoremPrediction {
  std::string theorem_id;
  bool applicable = false;
  std::string reason;  // failed guard clause when inapplicable
  PredictionKind kind = PredictionKind::Exact;
  long predicted = 0;

  StirlingKind target_kind = StirlingKind::Second;
  unsigned long target_n = 0, target_k = 0;
  unsigned long p = 2;

  std::optional<long> pole;                      // M, when the theorem exposes it
  std::optional<unsigned long> first_pole_degree;
  /// Companion index pair whose valuation the theorem asserts to be equal
  /// (Amdeberhan-type identities).
  std::optional<std::pair<unsigned long, unsigned long>> companion;
};

// nu_2(S(2^h, k)) = s_2(k) - 1 for 1 <= k <= 2^h.
TheoremPrediction predict_sdw(unsigned long h, unsigned long k);
// nu_2(S(c 2^h, k)) = s_2(k) - 1 for 1 <= k <= 2^h.
TheoremPrediction predict_tlc(unsigned long c, unsigned long h, unsigned long k);
// nu_2(S(c 2^h, (c-1) 2^h + a)) = s_2(a) - 1 for odd c, 1 <= a <= 2^h.
TheoremPrediction predict_upper_range(unsigned long c, unsigned long h, unsigned long a);

/// f(b,c) = s_2(b) - s_2(c) + nu_2(binom(2c-b-1, c)), the k-independent part
/// of the general-c valuation formula.
long gc_f(unsigned long b, unsigned long c);

// nu_2(S(c 2^h, b 2^h + a)) = s_2(a) + f(b,c), guarded by 2^{h-2} >= the
// binomial valuation in f.
TheoremPrediction predict_gc(unsigned long a, unsigned long b, unsigned long c,
                             unsigned long h);

// Limit of nu_2(S(c 2^h, b 2^h)) as h grows, two branches by the 2-adic
// comparison of b and c; tagged Exact when the attainment bound holds.
TheoremPrediction predict_th26a(unsigned long b, unsigned long c, unsigned long h);
TheoremPrediction predict_th26b(unsigned long b, unsigned long c, unsigned long h);

// nu_2(S(c 2^{h+1} + L, c 2^h + L)) = 2 s_2(c) - s_2(3c), constant in L < 2^h.
TheoremPrediction predict_padic_l(unsigned long c, unsigned long h, unsigned long L);
// The th26a value for nu_2(S(c 2^h + L, b 2^h + L)), constant in L < 2^h.
TheoremPrediction predict_padic_l2(unsigned long b, unsigned long c, unsigned long h,
                                   unsigned long L);

// nu_p(S(c p^h, k)) = (s_p(k) - k')/(p-1) for k <= min{c_0, k'} p^h when
// p-1 | n-k; the same value is a lower bound when only s_p(n) >= k'.
TheoremPrediction predict_snkp2(unsigned long c, unsigned long h, unsigned long k,
                                unsigned long p);
// nu_p(S(c p^h, k)) = (s_p(k) - c)/(p-1) for 1 <= c <= p-1, p-1 | n-k (a MZC).
TheoremPrediction predict_a22(unsigned long c, unsigned long h, unsigned long k,
                              unsigned long p);

// Bottom-segment form: B a bottom segment of n, k <= B, p-1 | B-k and
// binom(n + (B-k)/(p-1), n) a p-unit give M = s_p(B-k)/(p-1) and, when
// p-1 | n-k, the exact value (s_p(k) - s_p(B))/(p-1).
TheoremPrediction predict_arnieplus(unsigned long n, unsigned long k, unsigned long B,
                                    unsigned long p);
// Invariance form: S(B,k) a MZC plus a (p-1)-divisible top part T = n - B
// with no shared carries keeps nu_p(S(n,k)) = (s_p(k) - s_p(B))/(p-1).
TheoremPrediction predict_arniex(unsigned long n, unsigned long k, unsigned long B,
                                 unsigned long p);

/// The two shift formulas around the general-c theorem: plus1 predicts
/// nu_2(S(c 2^h + 1, b 2^h + a + 1)), plus2 predicts nu_2(S(c 2^h + 2,
/// b 2^h + a)) (lower bound only when a = 3 mod 4).
struct Plus12Prediction {
  TheoremPrediction plus1, plus2;
};
Plus12Prediction predict_plus12(unsigned long a, unsigned long b, unsigned long c,
                                unsigned long h);

// First kind: k = a p^h with a <= p-1, p-1 | n-a, k <= n < kp is a MZC with
// value (s_p(k-1) - s_p(n-1))/(p-1) and an equal-valuation companion at
// (n-1, k-1).
TheoremPrediction predict_s1_mzc(unsigned long n, unsigned long k, unsigned long p);
// First kind at n = 2^h: the SAMZ cases and their values h - 1 - nu_2(k).
TheoremPrediction predict_s1_2h(unsigned long h, unsigned long k);
// nu_2(S(c 2^h + u, 2^h)) >= h - 1 - nu_2(u), sharp for u even <= 2^{h-1},
// u = 1 and u = 1 + 2^{h-1}; companion at (c 2^h + u - 1, 2^h - 1).
TheoremPrediction predict_th321(unsigned long c, unsigned long h, unsigned long u);

/// Inputs a registry entry may consume; unused fields are ignored.
struct TheoremInputs {
  std::optional<unsigned long> n, k, c, b, a, h, L, u, p;
};

const std::vector<std::string>& theorem_ids();

/// Dispatch by stable identifier.  Throws std::domain_error for an unknown
/// id or missing inputs.  plus12 yields two predictions, all others one.
std::vector<TheoremPrediction> predict(const std::string& theorem_id,
                                       const TheoremInputs& in);

}  // namespace stirval
