#include "stirval/scan.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <optional>
#include <stdexcept>

#include <json.hpp>

#include "stirval/basep.hpp"
#include "stirval/cases.hpp"
#include "stirval/stirling.hpp"
#include "stirval/theorems.hpp"

namespace stirval {

namespace {

using json = nlohmann::json;

std::vector<long> axis_values(const AxisRange& r) {
  std::vector<long> out;
  if (r.step <= 0) throw std::domain_error("axis step must be positive");
  for (long v = r.lo; v <= r.hi; v += r.step) out.push_back(v);
  return out;
}

struct Partial {
  ScanCounts counts;
  std::vector<ScanRow> mismatches;
  unsigned long mismatch_overflow = 0;
  std::vector<ScanRow> rows;
};

void tally(Partial& p, ScanRow row, bool collect_rows) {
  if (row.status == "agree") {
    ++p.counts.agree;
    ++p.counts.checked;
  } else if (row.status == "disagree") {
    ++p.counts.disagree;
    ++p.counts.checked;
    if (p.mismatches.size() < kMismatchCap)
      p.mismatches.push_back(row);
    else
      ++p.mismatch_overflow;
  } else if (row.status == "unknown") {
    ++p.counts.unknown;
    ++p.counts.checked;
  } else {
    ++p.counts.inapplicable;
  }
  if (collect_rows) p.rows.push_back(std::move(row));
}

void merge(Partial& into, Partial&& from) {
  into.counts.checked += from.counts.checked;
  into.counts.agree += from.counts.agree;
  into.counts.disagree += from.counts.disagree;
  into.counts.inapplicable += from.counts.inapplicable;
  into.counts.unknown += from.counts.unknown;
  for (auto& m : from.mismatches) {
    if (into.mismatches.size() < kMismatchCap)
      into.mismatches.push_back(std::move(m));
    else
      ++into.mismatch_overflow;
  }
  into.mismatch_overflow += from.mismatch_overflow;
  into.rows.insert(into.rows.end(), std::make_move_iterator(from.rows.begin()),
                   std::make_move_iterator(from.rows.end()));
}

std::optional<unsigned long> opt_input(const std::vector<std::pair<std::string, long>>& in,
                                       const std::string& name) {
  for (const auto& [k, v] : in) {
    if (k != name) continue;
    if (v < 0) throw std::domain_error("axis " + name + " must be nonnegative");
    return static_cast<unsigned long>(v);
  }
  return std::nullopt;
}

ScanRow eval_theorem_point(const std::string& id,
                           std::vector<std::pair<std::string, long>> inputs,
                           unsigned long budget) {
  TheoremInputs t;
  t.n = opt_input(inputs, "n");
  t.k = opt_input(inputs, "k");
  t.c = opt_input(inputs, "c");
  t.b = opt_input(inputs, "b");
  t.a = opt_input(inputs, "a");
  t.h = opt_input(inputs, "h");
  t.L = opt_input(inputs, "L");
  t.u = opt_input(inputs, "u");
  t.p = opt_input(inputs, "p");

  ScanRow row;
  row.inputs = std::move(inputs);

  bool any_unknown = false, any_disagree = false, any_checked = false;
  std::string predicted, actual;
  auto append = [](std::string& dst, const std::string& piece) {
    if (!dst.empty()) dst += "|";
    dst += piece;
  };

  for (const TheoremPrediction& pred : predict(id, t)) {
    if (!pred.applicable || pred.kind == PredictionKind::LimitOnly) continue;
    const std::string shown =
        (pred.kind == PredictionKind::LowerBound ? ">=" : "") + std::to_string(pred.predicted);
    if (pred.target_n > budget) {
      any_unknown = true;
      append(predicted, shown);
      append(actual, "?");
      continue;
    }
    Valuation v = stirling_valuation(pred.target_n, pred.target_k, pred.p, pred.target_kind);
    const bool ok = pred.kind == PredictionKind::LowerBound
                        ? (v >= Valuation(pred.predicted))
                        : (v == Valuation(pred.predicted));
    any_checked = true;
    if (!ok) any_disagree = true;
    append(predicted, shown);
    append(actual, v.str());
  }

  row.predicted = predicted;
  row.actual = actual;
  if (any_disagree)
    row.status = "disagree";
  else if (any_unknown)
    row.status = "unknown";
  else if (any_checked)
    row.status = "agree";
  else
    row.status = "inapplicable";
  return row;
}

std::string criteria_str(const CriterionFlags& c) {
  auto one = [](Criterion x) {
    return x == Criterion::True ? "T" : x == Criterion::False ? "F" : "-";
  };
  return std::string("mzc=") + one(c.mzc) + " smzc=" + one(c.smzc) + " amzc=" + one(c.amzc) +
         " samzc=" + one(c.samzc);
}

std::string sharp_str(const CaseFlags& f) {
  auto one = [](bool x) { return x ? "T" : "F"; };
  return std::string("mzc=") + one(f.mzc) + " smzc=" + one(f.smzc) + " amzc=" + one(f.amzc) +
         " samzc=" + one(f.samzc);
}

ScanRow eval_case_point(std::vector<std::pair<std::string, long>> inputs,
                        unsigned long budget) {
  ScanRow row;
  row.inputs = std::move(inputs);
  const auto p = opt_input(row.inputs, "p");
  const auto n = opt_input(row.inputs, "n");
  const auto k = opt_input(row.inputs, "k");
  if (!p || !n || !k) throw std::domain_error("case-agreement needs axes p, n, k");
  const StirlingKind kind =
      opt_input(row.inputs, "kind").value_or(2) == 1 ? StirlingKind::First
                                                     : StirlingKind::Second;
  if (!is_prime(*p) || *k < 1 || *k > *n) {
    row.status = "inapplicable";
    return row;
  }
  if (*n > budget) {
    row.status = "unknown";
    return row;
  }
  CaseReport report = classify(*n, *k, *p, kind);
  row.predicted = criteria_str(report.criteria);
  row.actual = sharp_str(report.sharp);
  row.status = report.agreement ? "agree" : "disagree";
  return row;
}

bool is_theorem_target(const std::string& target) {
  const auto& ids = theorem_ids();
  return std::find(ids.begin(), ids.end(), target) != ids.end();
}

ScanReport run_grid(const ScanSpec& spec, bool collect_rows,
                    const std::function<ScanRow(std::vector<std::pair<std::string, long>>)>&
                        eval_point,
                    bool expand_k) {
  const auto start = std::chrono::steady_clock::now();

  // Materialize every grid point (axes in declaration order, outermost
  // first; the implicit k axis, when asked for, is innermost).
  std::vector<std::vector<std::pair<std::string, long>>> points;
  std::vector<std::pair<std::string, std::vector<long>>> axes;
  for (const auto& [name, range] : spec.grid) axes.emplace_back(name, axis_values(range));

  std::vector<std::pair<std::string, long>> current;
  const std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    if (depth == axes.size()) {
      if (expand_k) {
        const auto n = opt_input(current, "n");
        if (!n) throw std::domain_error("grid needs an n axis");
        for (unsigned long k = 1; k <= *n; ++k) {
          current.emplace_back("k", static_cast<long>(k));
          points.push_back(current);
          current.pop_back();
        }
      } else {
        points.push_back(current);
      }
      return;
    }
    for (long v : axes[depth].second) {
      current.emplace_back(axes[depth].first, v);
      descend(depth + 1);
      current.pop_back();
    }
  };
  descend(0);

  const unsigned int jobs = std::max(1u, spec.jobs);
  std::vector<std::future<Partial>> futures;
  const std::size_t chunk = (points.size() + jobs - 1) / std::max<std::size_t>(jobs, 1);
  for (unsigned int w = 0; w < jobs && w * chunk < points.size(); ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(points.size(), lo + chunk);
    futures.push_back(std::async(std::launch::async, [&, lo, hi] {
      Partial part;
      for (std::size_t i = lo; i < hi; ++i) tally(part, eval_point(points[i]), collect_rows);
      return part;
    }));
  }
  Partial total;
  for (auto& f : futures) merge(total, f.get());

  ScanReport report;
  report.spec = spec;
  report.counts = total.counts;
  report.mismatches = std::move(total.mismatches);
  report.mismatch_overflow = total.mismatch_overflow;
  report.rows = std::move(total.rows);
  report.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                            std::chrono::steady_clock::now() - start)
                                            .count());
  return report;
}

}  // namespace

ScanReport verify(const ScanSpec& spec, bool collect_rows) {
  if (spec.target == "case-agreement") {
    const bool has_k = std::any_of(spec.grid.begin(), spec.grid.end(),
                                   [](const auto& a) { return a.first == "k"; });
    return run_grid(
        spec, collect_rows,
        [&](std::vector<std::pair<std::string, long>> in) {
          return eval_case_point(std::move(in), spec.oracle_budget);
        },
        /*expand_k=*/!has_k);
  }
  if (is_theorem_target(spec.target)) {
    return run_grid(
        spec, collect_rows,
        [&](std::vector<std::pair<std::string, long>> in) {
          return eval_theorem_point(spec.target, std::move(in), spec.oracle_budget);
        },
        /*expand_k=*/false);
  }
  throw std::domain_error("unknown scan target: " + spec.target);
}

ScanReport scan_conjecture_stat(unsigned long c, const AxisRange& h_range,
                                unsigned long oracle_budget, unsigned int jobs) {
  const auto start = std::chrono::steady_clock::now();
  if (c < 1) throw std::domain_error("scan_conjecture_stat: need c >= 1");

  ScanReport report;
  report.spec.target = "conj_stat";
  report.spec.grid = {{"c", {static_cast<long>(c), static_cast<long>(c), 1}},
                      {"h", h_range}};
  report.spec.oracle_budget = oracle_budget;
  report.spec.jobs = jobs;

  const std::vector<long> hs = axis_values(h_range);
  std::vector<std::future<std::pair<StatRow, ScanCounts>>> futures;
  for (long h : hs) {
    futures.push_back(std::async(std::launch::async, [c, h, oracle_budget] {
      ScanCounts counts;
      StatRow stat;
      stat.h = h;
      const unsigned long n = c << h;
      stat.denominator = n;
      if (n > oracle_budget) {
        counts.unknown += n + 1;
        counts.checked += n + 1;
        return std::make_pair(stat, counts);
      }
      std::vector<std::pair<unsigned long, unsigned long>> pts;
      pts.reserve(n + 1);
      for (unsigned long k = 0; k <= n; ++k) pts.emplace_back(n, k);
      const auto vals = stirling_valuation_batch(pts, 2, StirlingKind::Second);
      for (unsigned long k = 0; k <= n; ++k) {
        const long rhs = static_cast<long>(digit_sum(std::uint64_t(k), 2)) -
                         static_cast<long>(digit_sum(std::uint64_t(c), 2)) +
                         static_cast<long>(carries(std::uint64_t(n), std::uint64_t(n - k), 2));
        const bool match = vals[k] == Valuation(rhs);
        ++counts.checked;
        if (match) {
          ++counts.agree;
          ++stat.numerator;
        } else {
          ++counts.disagree;
        }
      }
      return std::make_pair(stat, counts);
    }));
  }
  for (auto& f : futures) {
    auto [stat, counts] = f.get();
    report.statistics.push_back(stat);
    report.counts.checked += counts.checked;
    report.counts.agree += counts.agree;
    report.counts.disagree += counts.disagree;
    report.counts.unknown += counts.unknown;
  }
  std::sort(report.statistics.begin(), report.statistics.end(),
            [](const StatRow& a, const StatRow& b) { return a.h < b.h; });
  for (auto& s : report.statistics)
    s.fraction = s.denominator == 0
                     ? 0.0
                     : static_cast<double>(s.numerator) / static_cast<double>(s.denominator);
  report.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                            std::chrono::steady_clock::now() - start)
                                            .count());
  return report;
}

ScanReport scan_conjecture_a2(const ScanSpec& spec_in, bool collect_rows) {
  ScanSpec spec = spec_in;
  spec.target = "conj_a2";
  return run_grid(
      spec, collect_rows,
      [&spec](std::vector<std::pair<std::string, long>> in) {
        ScanRow row;
        row.inputs = std::move(in);
        const auto a = opt_input(row.inputs, "a");
        const auto b = opt_input(row.inputs, "b");
        const auto c = opt_input(row.inputs, "c");
        const auto h = opt_input(row.inputs, "h");
        if (!a || !b || !c || !h)
          throw std::domain_error("conjecture grid needs axes a, b, c, h");
        row.status = "inapplicable";
        if (*a % 4 != 3 || *h < 1 || *h > 40) return row;
        if (*b < 1 || *c <= *b) return row;
        const unsigned long half = 1ul << (*h - 1);
        if (*a < 3 || *a > half) return row;
        const long binom_val = static_cast<long>(binom_valuation(2 * *c - *b - 1, *c, 2));
        if (binom_val > 0 && (*h >= 62 ? false : 4ul * binom_val > (1ul << *h))) return row;
        const unsigned long n = (*c << *h) + 2, k = (*b << *h) + *a;
        const long predicted = static_cast<long>(digit_sum(std::uint64_t(*a), 2)) +
                               gc_f(*b, *c) +
                               static_cast<long>(binom_valuation(*a + 1, 2, 2)) - 1;
        row.predicted = std::to_string(predicted);
        if (n > spec.oracle_budget) {
          row.status = "unknown";
          row.actual = "?";
          return row;
        }
        const Valuation actual = stirling_valuation(n, k, 2, StirlingKind::Second);
        row.actual = actual.str();
        row.status = actual == Valuation(predicted) ? "agree" : "disagree";
        return row;
      },
      /*expand_k=*/false);
}

ScanReport scan_open_question(const ScanSpec& spec_in, bool collect_rows) {
  ScanSpec spec = spec_in;
  spec.target = "open_question";
  return run_grid(
      spec, collect_rows,
      [&spec](std::vector<std::pair<std::string, long>> in) {
        ScanRow row;
        row.inputs = std::move(in);
        const auto p = opt_input(row.inputs, "p");
        const auto n = opt_input(row.inputs, "n");
        const auto k = opt_input(row.inputs, "k");
        if (!p || !n || !k) throw std::domain_error("open-question grid needs axes p, n, k");
        row.status = "inapplicable";
        if (!is_prime(*p) || *k < 1 || *k >= *n) return row;
        if (!(int_valuation(std::uint64_t(*k), *p) < int_valuation(std::uint64_t(*n), *p)))
          return row;
        if (*n > spec.oracle_budget) {
          row.status = "unknown";
          return row;
        }
        const EstimateSet est = estimates_second(*n, *k, *p);
        const Valuation actual = stirling_valuation(*n, *k, *p, StirlingKind::Second);
        if (actual != Valuation(est.amz)) return row;  // not an oracle AMZ case
        row.predicted = "n=k (mod p-1)";
        const bool congruent = (*n - *k) % (*p - 1) == 0;
        row.actual = congruent ? "holds" : "violated";
        row.status = congruent ? "agree" : "disagree";
        return row;
      },
      /*expand_k=*/true);
}

namespace {

json row_to_json(const ScanRow& row) {
  json inputs = json::object();
  for (const auto& [k, v] : row.inputs) inputs[k] = v;
  return json{{"inputs", inputs},
              {"predicted", row.predicted},
              {"actual", row.actual},
              {"status", row.status}};
}

ScanRow row_from_json(const json& j) {
  ScanRow row;
  for (const auto& [k, v] : j.at("inputs").items())
    row.inputs.emplace_back(k, v.get<long>());
  row.predicted = j.at("predicted").get<std::string>();
  row.actual = j.at("actual").get<std::string>();
  row.status = j.at("status").get<std::string>();
  return row;
}

}  // namespace

std::string report_to_json(const ScanReport& report) {
  json grid = json::array();
  for (const auto& [name, range] : report.spec.grid)
    grid.push_back({{"axis", name}, {"lo", range.lo}, {"hi", range.hi}, {"step", range.step}});
  json mismatches = json::array();
  for (const auto& m : report.mismatches) mismatches.push_back(row_to_json(m));
  json rows = json::array();
  for (const auto& r : report.rows) rows.push_back(row_to_json(r));
  json stats = json::array();
  for (const auto& s : report.statistics)
    stats.push_back({{"h", s.h},
                     {"numerator", s.numerator},
                     {"denominator", s.denominator},
                     {"fraction", s.fraction}});
  json j{{"target", report.spec.target},
         {"grid", grid},
         {"oracle_budget", report.spec.oracle_budget},
         {"jobs", report.spec.jobs},
         {"counts",
          {{"checked", report.counts.checked},
           {"agree", report.counts.agree},
           {"disagree", report.counts.disagree},
           {"inapplicable", report.counts.inapplicable},
           {"unknown", report.counts.unknown}}},
         {"mismatches", mismatches},
         {"mismatch_overflow", report.mismatch_overflow},
         {"rows", rows},
         {"statistics", stats},
         {"elapsed_ms", report.elapsed_ms}};
  return j.dump(2);
}

ScanReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  ScanReport report;
  report.spec.target = j.at("target").get<std::string>();
  for (const auto& g : j.at("grid"))
    report.spec.grid.emplace_back(
        g.at("axis").get<std::string>(),
        AxisRange{g.at("lo").get<long>(), g.at("hi").get<long>(), g.at("step").get<long>()});
  report.spec.oracle_budget = j.at("oracle_budget").get<unsigned long>();
  report.spec.jobs = j.at("jobs").get<unsigned int>();
  const json& c = j.at("counts");
  report.counts = {c.at("checked").get<unsigned long>(), c.at("agree").get<unsigned long>(),
                   c.at("disagree").get<unsigned long>(),
                   c.at("inapplicable").get<unsigned long>(),
                   c.at("unknown").get<unsigned long>()};
  for (const auto& m : j.at("mismatches")) report.mismatches.push_back(row_from_json(m));
  report.mismatch_overflow = j.at("mismatch_overflow").get<unsigned long>();
  for (const auto& r : j.at("rows")) report.rows.push_back(row_from_json(r));
  for (const auto& s : j.at("statistics"))
    report.statistics.push_back({s.at("h").get<long>(),
                                 s.at("numerator").get<unsigned long long>(),
                                 s.at("denominator").get<unsigned long long>(),
                                 s.at("fraction").get<double>()});
  report.elapsed_ms = j.at("elapsed_ms").get<long>();
  return report;
}

std::string report_to_csv(const ScanReport& report) {
  // Column order: grid axes as declared, then any extra per-row inputs.
  std::vector<std::string> columns;
  for (const auto& [name, _] : report.spec.grid) columns.push_back(name);
  const auto& source = report.rows.empty() ? report.mismatches : report.rows;
  for (const auto& row : source)
    for (const auto& [name, _] : row.inputs)
      if (std::find(columns.begin(), columns.end(), name) == columns.end())
        columns.push_back(name);

  std::string out;
  for (const auto& c : columns) out += c + ",";
  out += "predicted,actual,status\n";
  for (const auto& row : source) {
    for (const auto& c : columns) {
      bool found = false;
      for (const auto& [name, v] : row.inputs)
        if (name == c) {
          out += std::to_string(v);
          found = true;
          break;
        }
      (void)found;
      out += ",";
    }
    out += row.predicted + "," + row.actual + "," + row.status + "\n";
  }
  if (!report.statistics.empty()) {
    out += "h,numerator,denominator,fraction\n";
    for (const auto& s : report.statistics)
      out += std::to_string(s.h) + "," + std::to_string(s.numerator) + "," +
             std::to_string(s.denominator) + "," + std::to_string(s.fraction) + "\n";
  }
  return out;
}

}  // namespace stirval
