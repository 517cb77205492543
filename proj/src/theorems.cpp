#include "stirval/theorems.hpp"

#include <bit>
#include <stdexcept>

#include "stirval/basep.hpp"
#include "stirval/poles.hpp"

namespace stirval {

namespace {

constexpr unsigned long kMaxShift = 40;  // 2^40 keeps every target well inside 64 bits

TheoremPrediction inapplicable(std::string id, std::string reason) {
  TheoremPrediction t;
  t.theorem_id = std::move(id);
  t.applicable = false;
  t.reason = std::move(reason);
  return t;
}

TheoremPrediction make(std::string id, PredictionKind kind, long value, StirlingKind sk,
                       unsigned long n, unsigned long k, unsigned long p) {
  TheoremPrediction t;
  t.theorem_id = std::move(id);
  t.applicable = true;
  t.kind = kind;
  t.predicted = value;
  t.target_kind = sk;
  t.target_n = n;
  t.target_k = k;
  t.p = p;
  return t;
}

bool shift_ok(unsigned long h) { return h <= kMaxShift; }

std::uint64_t pow2(unsigned long h) { return std::uint64_t(1) << h; }

// c 2^h stays comfortably inside 64 bits; rejects oversized CLI inputs.
bool scale_ok(unsigned long c, unsigned long h) {
  return shift_ok(h) && c <= (std::uint64_t(1) << (50 - (h <= 50 ? h : 50)));
}

long sigma2(std::uint64_t x) { return static_cast<long>(digit_sum(x, 2)); }

long nu2(std::uint64_t x) { return int_valuation(x, 2).value(); }

// 2^e >= v (or > v when strict), with e allowed to exceed the word size.
bool power_bound_holds(unsigned long e, long v, bool strict = false) {
  if (v <= 0) return true;
  if (e >= 62) return true;
  const long lhs = static_cast<long>(std::uint64_t(1) << e);
  return strict ? lhs > v : lhs >= v;
}

// 4 * v <= 2^h, the usual "2^{h-2} >= v" guard kept in integers.
bool quarter_bound_holds(unsigned long h, long v) {
  if (v <= 0) return true;
  if (h >= 62) return true;
  return 4 * static_cast<unsigned long long>(v) <= pow2(h);
}

}  // namespace

TheoremPrediction predict_sdw(unsigned long h, unsigned long k) {
  if (!shift_ok(h)) return inapplicable("sdw", "h too large");
  if (k < 1 || k > pow2(h)) return inapplicable("sdw", "need 1 <= k <= 2^h");
  return make("sdw", PredictionKind::Exact, sigma2(k) - 1, StirlingKind::Second,
              pow2(h), k, 2);
}

TheoremPrediction predict_tlc(unsigned long c, unsigned long h, unsigned long k) {
  if (!scale_ok(c, h)) return inapplicable("tlc", "c 2^h too large");
  if (c < 1) return inapplicable("tlc", "need c >= 1");
  if (k < 1 || k > pow2(h)) return inapplicable("tlc", "need 1 <= k <= 2^h");
  return make("tlc", PredictionKind::Exact, sigma2(k) - 1, StirlingKind::Second,
              c * pow2(h), k, 2);
}

TheoremPrediction predict_upper_range(unsigned long c, unsigned long h, unsigned long a) {
  if (!scale_ok(c, h)) return inapplicable("upper_range", "c 2^h too large");
  if (c < 1 || c % 2 == 0) return inapplicable("upper_range", "need odd c >= 1");
  if (a < 1 || a > pow2(h)) return inapplicable("upper_range", "need 1 <= a <= 2^h");
  return make("upper_range", PredictionKind::Exact, sigma2(a) - 1, StirlingKind::Second,
              c * pow2(h), (c - 1) * pow2(h) + a, 2);
}

long gc_f(unsigned long b, unsigned long c) {
  return sigma2(b) - sigma2(c) +
         static_cast<long>(binom_valuation(2 * c - b - 1, c, 2));
}

TheoremPrediction predict_gc(unsigned long a, unsigned long b, unsigned long c,
                             unsigned long h) {
  if (!scale_ok(c, h) || h < 1) return inapplicable("gc", "h out of range");
  if (c <= 1) return inapplicable("gc", "need c > 1");
  if (a < 1 || a > pow2(h - 1)) return inapplicable("gc", "need 1 <= a <= 2^{h-1}");
  const unsigned long n = c * pow2(h), k = b * pow2(h) + a;
  if (k >= n) return inapplicable("gc", "need k < n");
  const long binom_val = static_cast<long>(binom_valuation(2 * c - b - 1, c, 2));
  if (!quarter_bound_holds(h, binom_val))
    return inapplicable("gc", "bound 2^{h-2} >= nu_2(binom(2c-b-1,c)) fails");
  return make("gc", PredictionKind::Exact, sigma2(a) + gc_f(b, c), StirlingKind::Second,
              n, k, 2);
}

TheoremPrediction predict_th26a(unsigned long b, unsigned long c, unsigned long h) {
  if (!scale_ok(c, h) || h < 1) return inapplicable("th26a", "h out of range");
  if (b < 1 || b > c) return inapplicable("th26a", "need 1 <= b <= c");
  const unsigned long n = c * pow2(h), k = b * pow2(h);
  if (b == c) return make("th26a", PredictionKind::Exact, 0, StirlingKind::Second, n, k, 2);
  const long vb = nu2(b), vc = nu2(c), vd = nu2(c - b);
  const bool branch = vb < vc || (vb == vc && ((b >> vd) & 1));
  if (!branch) return inapplicable("th26a", "branch condition on nu_2(b), nu_2(c) fails");
  const long binom_val = static_cast<long>(binom_valuation(2 * c - b, c, 2));
  const long limit = sigma2(b) - sigma2(c) + binom_val;
  const bool attained =
      power_bound_holds(h - 1 + static_cast<unsigned long>(vd), binom_val);
  return make("th26a", attained ? PredictionKind::Exact : PredictionKind::LimitOnly,
              limit, StirlingKind::Second, n, k, 2);
}

TheoremPrediction predict_th26b(unsigned long b, unsigned long c, unsigned long h) {
  if (!scale_ok(c, h) || h < 1) return inapplicable("th26b", "h out of range");
  if (b < 1 || b > c) return inapplicable("th26b", "need 1 <= b <= c");
  const unsigned long n = c * pow2(h), k = b * pow2(h);
  if (b == c) return make("th26b", PredictionKind::Exact, 0, StirlingKind::Second, n, k, 2);
  const long vb = nu2(b), vc = nu2(c), vd = nu2(c - b);
  const bool strict_case = vc < vb;
  const bool equal_case = vb == vc && ((c >> vd) & 1);
  if (!strict_case && !equal_case)
    return inapplicable("th26b", "branch condition on nu_2(b), nu_2(c) fails");
  const long binom_val = static_cast<long>(binom_valuation(2 * c - b - 1, c - 1, 2));
  const long limit = sigma2(b - 1) - sigma2(c - 1) + binom_val;
  const bool attained =
      power_bound_holds(h - 1 + static_cast<unsigned long>(vc), binom_val,
                        /*strict=*/equal_case);
  return make("th26b", attained ? PredictionKind::Exact : PredictionKind::LimitOnly,
              limit, StirlingKind::Second, n, k, 2);
}

TheoremPrediction predict_padic_l(unsigned long c, unsigned long h, unsigned long L) {
  if (!scale_ok(c, h + 1) || h < 1) return inapplicable("padic_l", "h out of range");
  if (c < 1 || c % 2 == 0) return inapplicable("padic_l", "need odd c");
  if (L >= pow2(h)) return inapplicable("padic_l", "need L < 2^h");
  const long binom_val = static_cast<long>(binom_valuation(3 * c, c, 2));
  if (!power_bound_holds(h - 1, binom_val))
    return inapplicable("padic_l", "bound 2^{h-1} >= nu_2(binom(3c,c)) fails");
  const long value = 2 * sigma2(c) - sigma2(3 * c);
  return make("padic_l", PredictionKind::Exact, value, StirlingKind::Second,
              c * pow2(h + 1) + L, c * pow2(h) + L, 2);
}

TheoremPrediction predict_padic_l2(unsigned long b, unsigned long c, unsigned long h,
                                   unsigned long L) {
  if (!scale_ok(c, h) || h < 1) return inapplicable("padic_l2", "h out of range");
  if (b < 1 || b > c) return inapplicable("padic_l2", "need 1 <= b <= c");
  if (L >= pow2(h)) return inapplicable("padic_l2", "need L < 2^h");
  const unsigned long n = c * pow2(h) + L, k = b * pow2(h) + L;
  if (b == c)
    return make("padic_l2", PredictionKind::Exact, 0, StirlingKind::Second, n, k, 2);
  // nu_2(b) <= nu_2(c) covers both the plain branch condition and the
  // equal-valuation case, where the two limit formulas coincide.
  if (nu2(b) > nu2(c))
    return inapplicable("padic_l2", "need nu_2(b) <= nu_2(c)");
  const long vd = nu2(c - b);
  const long binom_val = static_cast<long>(binom_valuation(2 * c - b, c, 2));
  const long limit = sigma2(b) - sigma2(c) + binom_val;
  const bool attained = power_bound_holds(h - 1 + static_cast<unsigned long>(vd), binom_val);
  return make("padic_l2", attained ? PredictionKind::Exact : PredictionKind::LimitOnly,
              limit, StirlingKind::Second, n, k, 2);
}

TheoremPrediction predict_snkp2(unsigned long c, unsigned long h, unsigned long k,
                                unsigned long p) {
  if (!is_prime(p)) return inapplicable("snkp2", "p is not prime");
  if (c < 1) return inapplicable("snkp2", "need c >= 1");
  unsigned long long ph = 1;
  for (unsigned long i = 0; i < h; ++i) {
    ph *= p;
    if (ph > (1ull << 60)) return inapplicable("snkp2", "p^h too large");
  }
  if (c > (1ull << 60) / ph) return inapplicable("snkp2", "c p^h too large");
  const unsigned long long n = c * ph;
  const unsigned long c0 = c % p;  // lowest base-p digit of c
  if (k < 1) return inapplicable("snkp2", "need k >= 1");
  const unsigned long kp = static_cast<unsigned long>(
      least_positive_residue(k, p - 1));
  const unsigned long long k_cap = std::min<unsigned long long>(c0, kp) * ph;
  if (k > k_cap) return inapplicable("snkp2", "need k <= min{c_0, k'} p^h");
  const long value =
      (static_cast<long>(digit_sum(std::uint64_t(k), p)) - static_cast<long>(kp)) /
      (static_cast<long>(p) - 1);

  const bool exact = (n - k) % (p - 1) == 0;
  const bool bound = digit_sum(n, p) >= kp;
  if (!exact && !bound)
    return inapplicable("snkp2", "neither p-1 | n-k nor s_p(n) >= k'");
  TheoremPrediction t =
      make("snkp2", exact ? PredictionKind::Exact : PredictionKind::LowerBound, value,
           StirlingKind::Second, static_cast<unsigned long>(n), k, p);
  if (auto seg = bottom_segment_with_sum(n, p, kp)) {
    t.pole = static_cast<long>(digit_sum(*seg - k, p) / (p - 1));
  }
  return t;
}

TheoremPrediction predict_a22(unsigned long c, unsigned long h, unsigned long k,
                              unsigned long p) {
  if (!is_prime(p)) return inapplicable("a22", "p is not prime");
  if (c < 1 || c > p - 1) return inapplicable("a22", "need 1 <= c <= p-1");
  unsigned long long ph = 1;
  for (unsigned long i = 0; i < h; ++i) {
    ph *= p;
    if (ph > (1ull << 60)) return inapplicable("a22", "p^h too large");
  }
  const unsigned long long n = c * ph;
  if (k < 1 || k > n) return inapplicable("a22", "need 1 <= k <= n");
  if ((n - k) % (p - 1) != 0) return inapplicable("a22", "need p-1 | n-k");
  const long value =
      (static_cast<long>(digit_sum(std::uint64_t(k), p)) - static_cast<long>(c)) /
      (static_cast<long>(p) - 1);
  return make("a22", PredictionKind::Exact, value, StirlingKind::Second,
              static_cast<unsigned long>(n), k, p);
}

TheoremPrediction predict_arnieplus(unsigned long n, unsigned long k, unsigned long B,
                                    unsigned long p) {
  if (!is_prime(p)) return inapplicable("arnieplus", "p is not prime");
  if (B < 1 || !is_bottom_segment(B, n, p))
    return inapplicable("arnieplus", "B is not a bottom segment of n");
  if (k < 1 || k > B) return inapplicable("arnieplus", "need 0 < k <= B");
  if ((B - k) % (p - 1) != 0) return inapplicable("arnieplus", "need p-1 | B-k");
  const std::uint64_t r = (B - k) / (p - 1);
  if (carries(r, std::uint64_t(n), p) != 0)
    return inapplicable("arnieplus", "binom(n + (B-k)/(p-1), n) is divisible by p");
  const long value = (static_cast<long>(digit_sum(std::uint64_t(k), p)) -
                      static_cast<long>(digit_sum(std::uint64_t(B), p))) /
                     (static_cast<long>(p) - 1);
  const bool exact = (n - k) % (p - 1) == 0;
  TheoremPrediction t =
      make("arnieplus", exact ? PredictionKind::Exact : PredictionKind::LowerBound, value,
           StirlingKind::Second, n, k, p);
  t.pole = static_cast<long>(digit_sum(std::uint64_t(B - k), p) / (p - 1));
  t.first_pole_degree = n - B;
  return t;
}

TheoremPrediction predict_arniex(unsigned long n, unsigned long k, unsigned long B,
                                 unsigned long p) {
  if (!is_prime(p)) return inapplicable("arniex", "p is not prime");
  if (B < 1 || B > n) return inapplicable("arniex", "need 1 <= B <= n");
  if (k < 1 || k > B) return inapplicable("arniex", "need 0 < k <= B");
  if ((B - k) % (p - 1) != 0) return inapplicable("arniex", "need p-1 | B-k");
  if (carries((B - k) / (p - 1), std::uint64_t(B), p) != 0)
    return inapplicable("arniex", "S(B,k) is not a MZC");
  const std::uint64_t top = n - B;
  if (top % (p - 1) != 0) return inapplicable("arniex", "need p-1 | n-B");
  if (top > 0) {
    const long low_top = expand(top, p).low_position();
    const auto b_digits = expand(std::uint64_t(B), p).digits;
    const long high_b = static_cast<long>(b_digits.size()) - 1;
    if (low_top < high_b)
      return inapplicable("arniex", "p-powers of n-B must not go below those of B");
    if (carries(top, std::uint64_t(B), p) != 0)
      return inapplicable("arniex", "binom(n, B) is divisible by p");
  }
  const long value = (static_cast<long>(digit_sum(std::uint64_t(k), p)) -
                      static_cast<long>(digit_sum(std::uint64_t(B), p))) /
                     (static_cast<long>(p) - 1);
  return make("arniex", PredictionKind::Exact, value, StirlingKind::Second, n, k, p);
}

Plus12Prediction predict_plus12(unsigned long a, unsigned long b, unsigned long c,
                                unsigned long h) {
  Plus12Prediction out{inapplicable("plus12", ""), inapplicable("plus12", "")};
  if (!scale_ok(c, h) || h < 1) {
    out.plus1.reason = out.plus2.reason = "h out of range";
    return out;
  }
  if (b < 1 || c <= b) {
    out.plus1.reason = out.plus2.reason = "need c > b >= 1";
    return out;
  }
  const long binom_val = static_cast<long>(binom_valuation(2 * c - b - 1, c, 2));
  if (!quarter_bound_holds(h, binom_val)) {
    out.plus1.reason = out.plus2.reason = "bound 2^{h-2} >= nu_2(binom(2c-b-1,c)) fails";
    return out;
  }
  const long f = gc_f(b, c);
  const unsigned long half = pow2(h - 1);

  if (a >= 1 && a + 1 <= half) {
    out.plus1 = make("plus12", PredictionKind::Exact, sigma2(a) + f, StirlingKind::Second,
                     c * pow2(h) + 1, b * pow2(h) + a + 1, 2);
  } else {
    out.plus1.reason = "need 1 <= a <= 2^{h-1} - 1";
  }

  if (a >= 3 && a <= half) {
    const unsigned long n2 = c * pow2(h) + 2, k2 = b * pow2(h) + a;
    if (a % 4 == 3) {
      out.plus2 = make("plus12", PredictionKind::LowerBound, sigma2(a) + f,
                       StirlingKind::Second, n2, k2, 2);
    } else {
      const long extra = static_cast<long>(binom_valuation(a + 1, 2, 2));
      out.plus2 = make("plus12", PredictionKind::Exact, sigma2(a) + f + extra - 1,
                       StirlingKind::Second, n2, k2, 2);
    }
  } else {
    out.plus2.reason = "need 3 <= a <= 2^{h-1}";
  }
  return out;
}

TheoremPrediction predict_s1_mzc(unsigned long n, unsigned long k, unsigned long p) {
  if (!is_prime(p)) return inapplicable("s1_mzc", "p is not prime");
  if (k < 1) return inapplicable("s1_mzc", "need k >= 1");
  const long h = int_valuation(std::uint64_t(k), p).value();
  unsigned long long ph = 1;
  for (long i = 0; i < h; ++i) ph *= p;
  const unsigned long long a = k / ph;
  if (a > p - 1) return inapplicable("s1_mzc", "need k = a p^h with a <= p-1");
  if (n < k || n >= k * p) return inapplicable("s1_mzc", "need k <= n < k p");
  if ((n - a) % (p - 1) != 0) return inapplicable("s1_mzc", "need p-1 | n-a");
  const long value = (static_cast<long>(digit_sum(std::uint64_t(k - 1), p)) -
                      static_cast<long>(digit_sum(std::uint64_t(n - 1), p))) /
                     (static_cast<long>(p) - 1);
  TheoremPrediction t = make("s1_mzc", PredictionKind::Exact, value, StirlingKind::First,
                             n, k, p);
  if (n > 1 && k > 1) t.companion = {n - 1, k - 1};
  return t;
}

TheoremPrediction predict_s1_2h(unsigned long h, unsigned long k) {
  if (!shift_ok(h) || h < 1) return inapplicable("s1_2h", "h out of range");
  const unsigned long n = pow2(h);
  if (k < 1 || k > n) return inapplicable("s1_2h", "need 1 <= k <= 2^h");
  if (k == n) return make("s1_2h", PredictionKind::Exact, 0, StirlingKind::First, n, k, 2);
  const unsigned long half = pow2(h - 1);
  const bool samz_case =
      (k % 2 == 0 && half <= k) || k == n - 1 || (h >= 1 && k == half - 1);
  if (!samz_case) return inapplicable("s1_2h", "k is not one of the SAMZ cases");
  const long value = static_cast<long>(h) - 1 - nu2(k);
  TheoremPrediction t = make("s1_2h", PredictionKind::Exact, value, StirlingKind::First,
                             n, k, 2);
  t.companion = {n + 1, k + 1};
  return t;
}

TheoremPrediction predict_th321(unsigned long c, unsigned long h, unsigned long u) {
  if (!scale_ok(c, h) || h < 1) return inapplicable("th321", "h out of range");
  if (c < 1) return inapplicable("th321", "need c >= 1");
  if (u < 1 || u >= pow2(h)) return inapplicable("th321", "need 0 < u < 2^h");
  const unsigned long n = c * pow2(h) + u, k = pow2(h);
  const long value = static_cast<long>(h) - 1 - nu2(u);
  const unsigned long half = pow2(h - 1);
  const bool sharp = (u % 2 == 0 && u <= half) || u == 1 || u == 1 + half;
  TheoremPrediction t = make("th321", sharp ? PredictionKind::Exact : PredictionKind::LowerBound,
                             value, StirlingKind::Second, n, k, 2);
  if (sharp) t.companion = {n - 1, k - 1};
  return t;
}

namespace {

unsigned long need(const std::optional<unsigned long>& v, const char* flag) {
  if (!v) throw std::domain_error(std::string("missing input: ") + flag);
  return *v;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "sdw",     "tlc",      "upper_range", "gc",     "th26a",  "th26b",
      "padic_l", "padic_l2", "snkp2",       "a22",    "arnieplus", "arniex",
      "plus12",  "s1_mzc",   "s1_2h",       "th321"};
  return ids;
}

std::vector<TheoremPrediction> predict(const std::string& theorem_id,
                                       const TheoremInputs& in) {
  if (theorem_id == "sdw") return {predict_sdw(need(in.h, "h"), need(in.k, "k"))};
  if (theorem_id == "tlc")
    return {predict_tlc(need(in.c, "c"), need(in.h, "h"), need(in.k, "k"))};
  if (theorem_id == "upper_range")
    return {predict_upper_range(need(in.c, "c"), need(in.h, "h"), need(in.a, "a"))};
  if (theorem_id == "gc")
    return {predict_gc(need(in.a, "a"), need(in.b, "b"), need(in.c, "c"), need(in.h, "h"))};
  if (theorem_id == "th26a")
    return {predict_th26a(need(in.b, "b"), need(in.c, "c"), need(in.h, "h"))};
  if (theorem_id == "th26b")
    return {predict_th26b(need(in.b, "b"), need(in.c, "c"), need(in.h, "h"))};
  if (theorem_id == "padic_l")
    return {predict_padic_l(need(in.c, "c"), need(in.h, "h"), need(in.L, "L"))};
  if (theorem_id == "padic_l2")
    return {predict_padic_l2(need(in.b, "b"), need(in.c, "c"), need(in.h, "h"),
                             need(in.L, "L"))};
  if (theorem_id == "snkp2")
    return {predict_snkp2(need(in.c, "c"), need(in.h, "h"), need(in.k, "k"),
                          need(in.p, "p"))};
  if (theorem_id == "a22")
    return {predict_a22(need(in.c, "c"), need(in.h, "h"), need(in.k, "k"),
                        need(in.p, "p"))};
  if (theorem_id == "arnieplus")
    return {predict_arnieplus(need(in.n, "n"), need(in.k, "k"), need(in.b, "b"),
                              need(in.p, "p"))};
  if (theorem_id == "arniex")
    return {predict_arniex(need(in.n, "n"), need(in.k, "k"), need(in.b, "b"),
                           need(in.p, "p"))};
  if (theorem_id == "plus12") {
    auto both = predict_plus12(need(in.a, "a"), need(in.b, "b"), need(in.c, "c"),
                               need(in.h, "h"));
    return {both.plus1, both.plus2};
  }
  if (theorem_id == "s1_mzc")
    return {predict_s1_mzc(need(in.n, "n"), need(in.k, "k"), need(in.p, "p"))};
  if (theorem_id == "s1_2h") return {predict_s1_2h(need(in.h, "h"), need(in.k, "k"))};
  if (theorem_id == "th321")
    return {predict_th321(need(in.c, "c"), need(in.h, "h"), need(in.u, "u"))};
  throw std::domain_error("unknown theorem id: " + theorem_id);
}

}  // namespace stirval
