#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "stirval/cases.hpp"
#include "stirval/scan.hpp"
#include "stirval/theorems.hpp"

namespace stirval::cli {

/// Exit codes: 0 success, 1 domain error, 2 usage error, 3 resource cap.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Emitted record types and their JSON codecs; `--format json` output parses
// back into these.
struct ValRecord {
  int kind = 2;
  unsigned long p = 2, n = 0, k = 0;
  std::string valuation;  // decimal or "inf"
};

struct MaxPoleRecord {
  unsigned long p = 2;
  unsigned long degree = 0;
  long order = 0;
  unsigned long max_pole = 0;
  std::vector<std::pair<long, long>> vertices;
};

struct PredictRecord {
  std::string theorem_id;
  std::vector<TheoremPrediction> predictions;
};

struct ClassifyRecord {
  CaseReport report;
};

std::string to_json(const ValRecord& r);
std::string to_json(const MaxPoleRecord& r);
std::string to_json(const PredictRecord& r);
std::string to_json(const ClassifyRecord& r);

ValRecord val_from_json(const std::string& text);
MaxPoleRecord maxpole_from_json(const std::string& text);
PredictRecord predict_from_json(const std::string& text);
ClassifyRecord classify_from_json(const std::string& text);

/// Parses "axis=lo..hi[,step]" clauses joined by ';'.
std::vector<std::pair<std::string, AxisRange>> parse_grid(const std::string& text);

}  // namespace stirval::cli
