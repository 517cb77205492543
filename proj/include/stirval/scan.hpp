#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace stirval {

/// Inclusive integer range with step; empty when hi < lo.
struct AxisRange {
  long lo = 0;
  long hi = -1;
  long step = 1;
};

/// What to sweep: a theorem id (predictions vs oracle), "case-agreement"
/// (criterion flags vs oracle sharpness), or a conjecture scanner target.
/// Axes are iterated outermost-first in the order given.
struct ScanSpec {
  std::string target;
  std::vector<std::pair<std::string, AxisRange>> grid;
  unsigned long oracle_budget = 100000;
  unsigned int jobs = 1;
};

struct ScanCounts {
  unsigned long checked = 0;      // agree + disagree + unknown
  unsigned long agree = 0;
  unsigned long disagree = 0;
  unsigned long inapplicable = 0;
  unsigned long unknown = 0;
};

/// One evaluated grid point (also the mismatch record).
struct ScanRow {
  std::vector<std::pair<std::string, long>> inputs;
  std::string predicted;
  std::string actual;
  std::string status;  // agree | disagree | inapplicable | unknown
};

struct StatRow {
  long h = 0;
  unsigned long long numerator = 0;
  unsigned long long denominator = 1;
  double fraction = 0.0;
};

struct ScanReport {
  ScanSpec spec;
  ScanCounts counts;
  std::vector<ScanRow> mismatches;  // capped; disagreements only
  unsigned long mismatch_overflow = 0;
  std::vector<ScanRow> rows;  // every grid point; filled only on request
  std::vector<StatRow> statistics;
  long elapsed_ms = 0;
};

inline constexpr unsigned long kMismatchCap = 1000;

/// Sweeps the grid and compares predictions (or case criteria) against the
/// oracle.  Points whose oracle n exceeds the budget are counted unknown.
ScanReport verify(const ScanSpec& spec, bool collect_rows = false);

/// Fraction of k in [0, c 2^h] whose valuation matches the closed binomial
/// form, per h; reported as exact counts plus a decimal, never asserted.
ScanReport scan_conjecture_stat(unsigned long c, const AxisRange& h_range,
                                unsigned long oracle_budget = 100000,
                                unsigned int jobs = 1);

/// Counterexample hunt for the a = 3 (mod 4) shift formula; grid axes
/// (a, b, c, h), guard-filtered. Expected empty mismatch list.
ScanReport scan_conjecture_a2(const ScanSpec& spec, bool collect_rows = false);

/// Open-question probe: oracle-confirmed almost-minimum-zero points with
/// nu_p(k) < nu_p(n) that violate n = k (mod p-1); grid axes (n, p).
ScanReport scan_open_question(const ScanSpec& spec, bool collect_rows = false);

std::string report_to_json(const ScanReport& report);
ScanReport report_from_json(const std::string& text);
std::string report_to_csv(const ScanReport& report);

}  // namespace stirval
