// Acceptance suite: one pass/fail line per criterion, exact comparisons
// throughout, exit status 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <map>
#include <string>
#include <vector>

#include "series_oracle.hpp"
#include "stirval/basep.hpp"
#include "stirval/bernoulli.hpp"
#include "stirval/cases.hpp"
#include "stirval/poles.hpp"
#include "stirval/scan.hpp"
#include "stirval/stirling.hpp"
#include "stirval/theorems.hpp"

using namespace stirval;

namespace {

struct Outcome {
  bool pass = true;
  unsigned long checks = 0;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using CriterionFn = std::function<void(Outcome&)>;

long sigma(unsigned long n, unsigned long p) {
  return static_cast<long>(digit_sum(std::uint64_t(n), p));
}

Valuation val2(unsigned long n, unsigned long k) {
  return stirling_valuation(n, k, 2, StirlingKind::Second);
}

// ---- 1. worked examples ----------------------------------------------------
void criterion_worked_examples(Outcome& o) {
  o.expect(stirling_valuation(4131, 241, 3, StirlingKind::Second) == 4, "S(4131,241) at p=3");
  o.expect(stirling_valuation(28750, 622, 5, StirlingKind::Second) == 3,
           "S(28750,622) at p=5");
  o.expect(stirling_valuation(2900, 348, 5, StirlingKind::Second) == 2, "S(2900,348) at p=5");
  o.expect(max_pole(2552, -348, 5) == 1, "maximum pole for S(2900,348)");
  const struct {
    unsigned long n, k, p;
    long v;
  } samz[] = {{100, 45, 3, 2}, {301, 75, 5, 2}, {272, 98, 7, 1}};
  for (const auto& e : samz) {
    CaseReport r = classify(e.n, e.k, e.p, StirlingKind::Second);
    o.expect(r.actual == e.v, "valuation at (" + std::to_string(e.n) + "," +
                                  std::to_string(e.k) + ")");
    o.expect(r.sharp.samzc, "shifted-almost sharpness at (" + std::to_string(e.n) + "," +
                                std::to_string(e.k) + ")");
  }
}

// ---- 2. power-of-two columns (alternating-sum oracle) ----------------------
void criterion_tlc(Outcome& o) {
  for (unsigned long c : {1ul, 3ul, 5ul})
    for (unsigned long h = 1; h <= 8; ++h)
      for (unsigned long k = 1; k <= (1ul << h); ++k)
        o.expect(val2(c << h, k) == sigma(k, 2) - 1,
                 "c=" + std::to_string(c) + " h=" + std::to_string(h) +
                     " k=" + std::to_string(k));
}

// ---- 3. upper range ---------------------------------------------------------
void criterion_upper_range(Outcome& o) {
  for (unsigned long c : {3ul, 5ul, 7ul})
    for (unsigned long h = 1; h <= 6; ++h)
      for (unsigned long a = 1; a <= (1ul << h); ++a)
        o.expect(val2(c << h, ((c - 1) << h) + a) == sigma(a, 2) - 1,
                 "c=" + std::to_string(c) + " h=" + std::to_string(h) +
                     " a=" + std::to_string(a));
}

// ---- 4. general-c formula ---------------------------------------------------
void criterion_gc(Outcome& o) {
  for (unsigned long c = 2; c <= 9; ++c) {
    for (unsigned long b = 1; b < c; ++b) {
      for (unsigned long h = 2; h <= 7; ++h) {
        const long guard_val = static_cast<long>(binom_valuation(2 * c - b - 1, c, 2));
        if (guard_val > 0 && 4ull * guard_val > (1ull << h)) continue;
        for (unsigned long a = 1; a <= (1ul << (h - 1)); ++a) {
          auto t = predict_gc(a, b, c, h);
          if (!t.applicable) continue;
          o.expect(val2(t.target_n, t.target_k) == t.predicted,
                   "gc c=" + std::to_string(c) + " b=" + std::to_string(b) +
                       " h=" + std::to_string(h) + " a=" + std::to_string(a));
          if (b % 2 == 1) {
            o.expect(gc_f(b, c) ==
                         int_valuation(std::uint64_t(c - b), 2).value() +
                             static_cast<long>(binom_valuation(2 * c - b, b, 2)),
                     "inner identity at odd b=" + std::to_string(b));
          }
        }
      }
    }
  }
}

// ---- 5. constant diagonal shift --------------------------------------------
void criterion_padic_l(Outcome& o) {
  for (unsigned long c : {1ul, 3ul, 5ul, 7ul}) {
    const long need = static_cast<long>(binom_valuation(3 * c, c, 2));
    unsigned long h = 1;
    while (static_cast<long>(1ul << (h - 1)) < need) ++h;
    const long want = 2 * sigma(c, 2) - sigma(3 * c, 2);
    const bool fibbinary = (c & (c >> 1)) == 0;
    o.expect((want == 0) == fibbinary, "zero value vs Fibbinary at c=" + std::to_string(c));
    for (unsigned long L = 0; L < (1ul << h); ++L) {
      auto t = predict_padic_l(c, h, L);
      o.expect(t.applicable && t.predicted == want, "guard at c=" + std::to_string(c));
      o.expect(val2(t.target_n, t.target_k) == want,
               "c=" + std::to_string(c) + " L=" + std::to_string(L));
    }
  }
}

// ---- 6. odd-prime power columns ---------------------------------------------
void criterion_snkp2(Outcome& o) {
  struct Point {
    unsigned long n, k;
    long value;
    bool exact;
  };
  auto sweep = [](unsigned long p) {
    std::vector<Point> pts;
    for (unsigned long c = 1; c <= 50; ++c) {
      for (unsigned long h = 0; h <= 5; ++h) {
        unsigned long long ph = 1;
        bool over = false;
        for (unsigned long i = 0; i < h; ++i) {
          ph *= p;
          if (ph > 100000) over = true;
        }
        if (over) continue;
        const unsigned long long n = c * ph;
        if (n > 100000) continue;
        const unsigned long c0 = c % p;
        if (c0 == 0) continue;
        const unsigned long long k_hi = std::min<unsigned long long>(n, c0 * ph);
        for (unsigned long long k = 1; k <= k_hi; ++k) {
          const unsigned long kp =
              static_cast<unsigned long>(least_positive_residue(k, p - 1));
          if (k > std::min<unsigned long long>(c0, kp) * ph) continue;
          const bool exact = (n - k) % (p - 1) == 0;
          if (!exact && digit_sum(std::uint64_t(n), p) < kp) continue;
          const long value = (sigma(k, p) - static_cast<long>(kp)) /
                             (static_cast<long>(p) - 1);
          pts.push_back({static_cast<unsigned long>(n), static_cast<unsigned long>(k),
                         value, exact});
        }
      }
    }
    return pts;
  };

  std::map<unsigned long, std::future<std::pair<std::vector<Point>, std::vector<Valuation>>>>
      futures;
  for (unsigned long p : {3ul, 5ul, 7ul}) {
    futures.emplace(p, std::async(std::launch::async, [p, &sweep] {
      auto pts = sweep(p);
      std::vector<std::pair<unsigned long, unsigned long>> coords;
      coords.reserve(pts.size());
      for (const auto& q : pts) coords.emplace_back(q.n, q.k);
      auto vals = stirling_valuation_batch(coords, p, StirlingKind::Second);
      return std::make_pair(std::move(pts), std::move(vals));
    }));
  }
  for (auto& [p, fut] : futures) {
    auto [pts, vals] = fut.get();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& q = pts[i];
      if (q.exact) {
        o.expect(vals[i] == q.value, "exact value p=" + std::to_string(p) +
                                         " n=" + std::to_string(q.n) +
                                         " k=" + std::to_string(q.k));
      } else {
        o.expect(Valuation(q.value) <= vals[i], "bound p=" + std::to_string(p) +
                                                    " n=" + std::to_string(q.n) +
                                                    " k=" + std::to_string(q.k));
      }
    }
  }
}

// ---- 7. chains vs exact Newton polygons -------------------------------------
void criterion_chain_polygons(Outcome& o) {
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (unsigned long n = 0; n <= 30; ++n) {
      std::vector<long> orders;
      for (long l = -30; l <= -1; ++l) orders.push_back(l);
      for (long l = static_cast<long>(n) + 1; l <= static_cast<long>(n) + 30; ++l)
        orders.push_back(l);
      for (long l : orders) {
        auto profile = coefficient_profile(n, l, p);
        auto hull = newton_polygon(profile);
        auto chain = kimura_chain(n, l, p);
        o.expect(static_cast<long>(chain.length()) == profile.max_pole(),
                 "pole count p=" + std::to_string(p) + " n=" + std::to_string(n) +
                     " l=" + std::to_string(l));
        for (auto [x, y] : chain.vertices())
          o.expect(on_polygon(hull, x, y), "vertex p=" + std::to_string(p) +
                                               " n=" + std::to_string(n) +
                                               " l=" + std::to_string(l));
      }
    }
  }
}

// ---- 8. estimate nonnegativity and lower bounds ------------------------------
void criterion_bounds(Outcome& o) {
  std::vector<std::pair<unsigned long, unsigned long>> pts;
  for (unsigned long n = 1; n <= 300; ++n)
    for (unsigned long k = 1; k <= n; ++k) pts.emplace_back(n, k);
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    const auto vals = stirling_valuation_batch(pts, p, StirlingKind::Second);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto [n, k] = pts[i];
      auto e2 = estimates_second(n, k, p);
      auto e1 = estimates_first(n, k, p);
      o.expect(e2.amz >= 0 && e2.samz >= 0, "second-kind almost estimates at n=" +
                                                std::to_string(n) + " k=" + std::to_string(k));
      o.expect(e1.amz >= 0 && e1.samz >= 0, "first-kind almost estimates at n=" +
                                                std::to_string(n) + " k=" + std::to_string(k));
      if (p == 2) {
        o.expect(Valuation(e2.mz_raw.num) <= vals[i],
                 "digit-sum bound at n=" + std::to_string(n) + " k=" + std::to_string(k));
      } else if ((n - k) % (p - 1) == 0) {
        o.expect(Valuation(e2.mz) <= vals[i],
                 "divided digit-sum bound p=" + std::to_string(p) + " n=" +
                     std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
}

// ---- 9. criteria agree with sharpness ----------------------------------------
void criterion_case_agreement(Outcome& o) {
  std::vector<std::pair<unsigned long, unsigned long>> pts;
  for (unsigned long n = 1; n <= 301; ++n)
    for (unsigned long k = 1; k <= n; ++k) pts.emplace_back(n, k);
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    const auto vals = stirling_valuation_batch(pts, p, StirlingKind::Second);
    auto val_at = [&](unsigned long n, unsigned long k) {
      return vals[(n - 1) * n / 2 + (k - 1)];
    };
    for (unsigned long n = 1; n <= 200; ++n) {
      for (unsigned long k = 1; k <= n; ++k) {
        CaseReport r = classify_with_actual(n, k, p, StirlingKind::Second, val_at(n, k));
        o.expect(r.agreement, "criterion/sharpness split at p=" + std::to_string(p) +
                                  " n=" + std::to_string(n) + " k=" + std::to_string(k));
        if (r.actual == 0) {
          o.expect((r.sharp.mzc || r.sharp.amzc) && (r.sharp.smzc || r.sharp.samzc),
                   "zero valuation not covered at n=" + std::to_string(n) +
                       " k=" + std::to_string(k));
        }
      }
    }
    for (unsigned long n = 1; n <= 300; ++n)
      for (unsigned long k = 1; k <= n; ++k)
        o.expect(is_mzc_second(n, k, p) == is_smzc_second(n + 1, k + 1, p),
                 "shift equivalence at p=" + std::to_string(p) + " n=" + std::to_string(n));
  }
}

// ---- 10. first kind ----------------------------------------------------------
void criterion_first_kind(Outcome& o) {
  // n = 2^h rows, h <= 8, with companions at (n+1, k+1)
  std::vector<std::pair<unsigned long, unsigned long>> pts;
  for (unsigned long h = 1; h <= 8; ++h) {
    const unsigned long n = 1ul << h;
    for (unsigned long k = 1; k <= n; ++k) {
      pts.emplace_back(n, k);
      pts.emplace_back(n + 1, k + 1);
    }
  }
  const auto vals = stirling_valuation_batch(pts, 2, StirlingKind::First);
  std::size_t idx = 0;
  for (unsigned long h = 1; h <= 8; ++h) {
    const unsigned long n = 1ul << h;
    for (unsigned long k = 1; k <= n; ++k, idx += 2) {
      auto t = predict_s1_2h(h, k);
      if (!t.applicable) continue;
      o.expect(vals[idx] == t.predicted,
               "value h=" + std::to_string(h) + " k=" + std::to_string(k));
      if (t.companion)
        o.expect(vals[idx + 1] == vals[idx],
                 "companion h=" + std::to_string(h) + " k=" + std::to_string(k));
    }
  }

  // prime-power k columns, n <= 200
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    std::vector<std::pair<unsigned long, unsigned long>> grid;
    std::vector<TheoremPrediction> preds;
    for (unsigned long n = 1; n <= 200; ++n)
      for (unsigned long k = 1; k <= n; ++k) {
        auto t = predict_s1_mzc(n, k, p);
        if (!t.applicable) continue;
        grid.emplace_back(n, k);
        if (t.companion) grid.emplace_back(t.companion->first, t.companion->second);
        preds.push_back(std::move(t));
      }
    const auto got = stirling_valuation_batch(grid, p, StirlingKind::First);
    std::size_t at = 0;
    for (const auto& t : preds) {
      o.expect(got[at] == t.predicted, "first-kind value p=" + std::to_string(p) + " n=" +
                                           std::to_string(t.target_n) +
                                           " k=" + std::to_string(t.target_k));
      ++at;
      if (t.companion) {
        o.expect(got[at] == t.predicted, "first-kind companion p=" + std::to_string(p) +
                                             " n=" + std::to_string(t.target_n));
        ++at;
      }
    }
  }
}

// ---- 11. equal-valuation shifts ----------------------------------------------
void criterion_amdeberhan(Outcome& o) {
  std::vector<std::pair<unsigned long, unsigned long>> pts;
  for (unsigned long c = 1; c <= 5; ++c)
    for (unsigned long h = 1; h <= 7; ++h)
      for (unsigned long k = 1; k <= (1ul << h); ++k) {
        pts.emplace_back(c << h, k);
        pts.emplace_back((c << h) + 1, k + 1);
      }
  const auto vals = stirling_valuation_batch(pts, 2, StirlingKind::Second);
  for (std::size_t i = 0; i < pts.size(); i += 2)
    o.expect(vals[i] == vals[i + 1], "shift at n=" + std::to_string(pts[i].first) +
                                         " k=" + std::to_string(pts[i].second));
}

// ---- 12. partition sums vs series expansion ----------------------------------
void criterion_bernoulli_oracle(Outcome& o) {
  for (long l = -20; l <= 20; ++l) {
    const auto row = series_oracle::hob_row(l, 20);
    for (unsigned long n = 0; n <= 20; ++n) {
      o.expect(hob_number(n, l) == row[n],
               "series mismatch n=" + std::to_string(n) + " l=" + std::to_string(l));
      if (l != static_cast<long>(n)) {
        const mpq_class rhs =
            mpq_class(l) / mpq_class(l - static_cast<long>(n)) * hob_at_one(n, l + 1);
        o.expect(hob_number(n, l) == rhs,
                 "shift identity n=" + std::to_string(n) + " l=" + std::to_string(l));
      }
    }
  }
}

// ---- 13. conjecture scanners --------------------------------------------------
void criterion_scanners(Outcome& o) {
  auto stat = scan_conjecture_stat(3, {1, 8, 1}, 100000, 4);
  o.expect(stat.statistics.size() == 8, "statistics row count");
  for (const auto& s : stat.statistics)
    o.expect(s.fraction >= 0.0 && s.fraction <= 1.0 && s.denominator == (3ull << s.h),
             "statistics row shape at h=" + std::to_string(s.h));
  o.expect(stat.statistics.back().fraction >= stat.statistics.front().fraction,
           "fraction trend");
  const std::string json = report_to_json(stat);
  o.expect(report_to_json(report_from_json(json)) == json, "statistics report round-trip");

  ScanSpec a2;
  a2.grid = {{"a", {3, 63, 4}}, {"b", {1, 8, 1}}, {"c", {2, 9, 1}}, {"h", {3, 9, 1}}};
  a2.oracle_budget = 10000;
  a2.jobs = 4;
  auto hunt = scan_conjecture_a2(a2);
  o.expect(hunt.counts.agree > 0, "counterexample hunt coverage");
  o.expect(hunt.counts.disagree == 0, "counterexample found (reported)");
  o.expect(hunt.mismatches.size() == hunt.counts.disagree, "mismatch list consistency");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, CriterionFn>> criteria = {
      {"worked examples reproduce exactly", criterion_worked_examples},
      {"power-of-two columns equal s_2(k)-1", criterion_tlc},
      {"upper range equals s_2(a)-1", criterion_upper_range},
      {"general-c formula with inner identity", criterion_gc},
      {"constant diagonal shift and Fibbinary", criterion_padic_l},
      {"odd-prime power columns, exact and bound", criterion_snkp2},
      {"chains match exact Newton polygons", criterion_chain_polygons},
      {"estimate nonnegativity and lower bounds", criterion_bounds},
      {"case criteria agree with sharpness", criterion_case_agreement},
      {"first-kind values and companions", criterion_first_kind},
      {"equal-valuation shifts on c 2^h rows", criterion_amdeberhan},
      {"partition sums equal series expansion", criterion_bernoulli_oracle},
      {"conjecture scanners emit well-formed reports", criterion_scanners},
  };

  // stated runtime limits, in seconds, by criterion number (0 = none)
  const double limits[] = {5, 60, 0, 0, 0, 0, 120, 0, 0, 0, 0, 0, 0};

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    criteria[i].second(outcome);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limits[i] > 0 && secs > limits[i]) {
      outcome.pass = false;
      outcome.detail = "runtime " + std::to_string(secs) + "s exceeds " +
                       std::to_string(limits[i]) + "s";
    }
    all_pass = all_pass && outcome.pass;
    std::printf("criterion %2zu %s  %-45s (%lu checks, %.2fs)%s%s\n", i + 1,
                outcome.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), outcome.checks,
                secs, outcome.detail.empty() ? "" : "  first failure: ",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
