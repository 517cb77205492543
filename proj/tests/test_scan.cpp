#include <doctest.h>

#include "stirval/scan.hpp"

using namespace stirval;

namespace {

ScanReport strip_timing(ScanReport r) {
  r.elapsed_ms = 0;
  return r;
}

}  // namespace

TEST_CASE("verified theorem sweeps have no disagreements") {
  ScanSpec sdw;
  sdw.target = "sdw";
  sdw.grid = {{"h", {1, 8, 1}}, {"k", {1, 256, 1}}};
  auto r = verify(sdw);
  CHECK(r.counts.disagree == 0);
  CHECK(r.counts.agree > 0);
  CHECK(r.counts.checked == r.counts.agree + r.counts.disagree + r.counts.unknown);
  CHECK(r.mismatches.empty());

  ScanSpec gc;
  gc.target = "gc";
  gc.grid = {{"c", {2, 6, 1}}, {"b", {0, 5, 1}}, {"h", {2, 5, 1}}, {"a", {1, 16, 1}}};
  gc.jobs = 4;
  auto g = verify(gc);
  CHECK(g.counts.disagree == 0);
  CHECK(g.counts.agree > 0);
}

TEST_CASE("case agreement sweep") {
  ScanSpec spec;
  spec.target = "case-agreement";
  spec.grid = {{"p", {2, 3, 1}}, {"n", {1, 60, 1}}};  // k expands implicitly
  spec.jobs = 4;
  auto r = verify(spec);
  CHECK(r.counts.disagree == 0);
  CHECK(r.counts.agree == 2 * (60 * 61) / 2);
  CHECK(r.counts.inapplicable == 0);
}

TEST_CASE("oracle budget marks points unknown") {
  ScanSpec spec;
  spec.target = "tlc";
  spec.grid = {{"c", {3, 3, 1}}, {"h", {9, 9, 1}}, {"k", {1, 8, 1}}};
  spec.oracle_budget = 100;  // n = 1536 exceeds it
  auto r = verify(spec);
  CHECK(r.counts.unknown == 8);
  CHECK(r.counts.agree == 0);
}

TEST_CASE("parallel and serial scans produce identical reports") {
  ScanSpec spec;
  spec.target = "case-agreement";
  spec.grid = {{"p", {2, 5, 1}}, {"n", {1, 40, 1}}};
  spec.jobs = 1;
  auto serial = verify(spec, true);
  spec.jobs = 8;
  auto parallel = verify(spec, true);
  serial.spec.jobs = parallel.spec.jobs = 0;
  CHECK(report_to_json(strip_timing(serial)) == report_to_json(strip_timing(parallel)));
}

TEST_CASE("non-prime grid points are inapplicable, not errors") {
  ScanSpec spec;
  spec.target = "case-agreement";
  spec.grid = {{"p", {4, 4, 1}}, {"n", {5, 5, 1}}};
  auto r = verify(spec);
  CHECK(r.counts.inapplicable == 5);
  CHECK(r.counts.checked == 0);
}

TEST_CASE("sharpness fraction statistics") {
  auto r = scan_conjecture_stat(1, {4, 4, 1});
  REQUIRE(r.statistics.size() == 1);
  // every k in [1, 2^h] matches at n = 2^h, only k = 0 fails
  CHECK(r.statistics[0].numerator == 16);
  CHECK(r.statistics[0].denominator == 16);
  CHECK(r.statistics[0].fraction == 1.0);

  auto r3 = scan_conjecture_stat(3, {1, 6, 1});
  REQUIRE(r3.statistics.size() == 6);
  // the matching fraction grows toward 1 with h
  CHECK(r3.statistics.back().fraction > 0.8);
  CHECK(r3.statistics.front().denominator == 6);
}

TEST_CASE("a = 3 mod 4 counterexample hunt comes back empty") {
  ScanSpec spec;
  spec.grid = {{"a", {3, 31, 4}}, {"b", {1, 3, 1}}, {"c", {2, 6, 1}}, {"h", {3, 6, 1}}};
  spec.oracle_budget = 10000;
  spec.jobs = 4;
  auto r = scan_conjecture_a2(spec);
  CHECK(r.counts.disagree == 0);
  CHECK(r.counts.agree > 0);
  CHECK(r.mismatches.empty());
}

TEST_CASE("open-question probe runs and reports") {
  ScanSpec spec;
  spec.grid = {{"p", {3, 5, 2}}, {"n", {2, 80, 1}}};
  spec.jobs = 4;
  auto r = scan_open_question(spec);
  CHECK(r.counts.checked == r.counts.agree + r.counts.disagree + r.counts.unknown);
  // the probe reports, it never asserts: both outcomes are valid, but the
  // mismatch list must mirror the disagree count
  CHECK(r.mismatches.size() == r.counts.disagree);
}

TEST_CASE("report serialization round-trips") {
  ScanSpec spec;
  spec.target = "sdw";
  spec.grid = {{"h", {1, 4, 1}}, {"k", {1, 20, 1}}};
  auto r = verify(spec, true);
  const std::string json = report_to_json(r);
  const ScanReport back = report_from_json(json);
  CHECK(report_to_json(back) == json);

  const std::string csv = report_to_csv(r);
  CHECK(csv.find("predicted,actual,status") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r.rows.size()) + 1);
}
