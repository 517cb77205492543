#include "stirval/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <sstream>

#include "stirval/basep.hpp"
#include "stirval/poles.hpp"

namespace stirval::cli {

namespace {

using json = nlohmann::json;

json valuation_json(const std::string& s) {
  if (s == "inf") return json("inf");
  return json(std::stol(s));
}

std::string valuation_from(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  return std::to_string(j.get<long>());
}

json prediction_to_json(const TheoremPrediction& t) {
  json j{{"theorem", t.theorem_id},
         {"applicable", t.applicable},
         {"kind", t.kind == PredictionKind::Exact        ? "exact"
                  : t.kind == PredictionKind::LowerBound ? "lower_bound"
                                                         : "limit_only"},
         {"target_kind", t.target_kind == StirlingKind::Second ? 2 : 1}};
  if (t.applicable) {
    j["predicted"] = t.predicted;
    j["n"] = t.target_n;
    j["k"] = t.target_k;
    j["p"] = t.p;
  } else {
    j["reason"] = t.reason;
  }
  if (t.pole) j["pole"] = *t.pole;
  if (t.first_pole_degree) j["first_pole_degree"] = *t.first_pole_degree;
  if (t.companion) j["companion"] = {t.companion->first, t.companion->second};
  return j;
}

TheoremPrediction prediction_from_json(const json& j) {
  TheoremPrediction t;
  t.theorem_id = j.at("theorem").get<std::string>();
  t.applicable = j.at("applicable").get<bool>();
  const std::string kind = j.at("kind").get<std::string>();
  t.kind = kind == "exact"        ? PredictionKind::Exact
           : kind == "lower_bound" ? PredictionKind::LowerBound
                                   : PredictionKind::LimitOnly;
  t.target_kind = j.at("target_kind").get<int>() == 2 ? StirlingKind::Second
                                                      : StirlingKind::First;
  if (t.applicable) {
    t.predicted = j.at("predicted").get<long>();
    t.target_n = j.at("n").get<unsigned long>();
    t.target_k = j.at("k").get<unsigned long>();
    t.p = j.at("p").get<unsigned long>();
  } else {
    t.reason = j.at("reason").get<std::string>();
  }
  if (j.contains("pole")) t.pole = j.at("pole").get<long>();
  if (j.contains("first_pole_degree"))
    t.first_pole_degree = j.at("first_pole_degree").get<unsigned long>();
  if (j.contains("companion"))
    t.companion = {j.at("companion")[0].get<unsigned long>(),
                   j.at("companion")[1].get<unsigned long>()};
  return t;
}

const char* criterion_str(Criterion c) {
  return c == Criterion::True ? "true" : c == Criterion::False ? "false" : "inapplicable";
}

Criterion criterion_from(const std::string& s) {
  if (s == "true") return Criterion::True;
  if (s == "false") return Criterion::False;
  return Criterion::Inapplicable;
}

json report_json(const CaseReport& r) {
  json j{{"n", r.n},
         {"k", r.k},
         {"p", r.p},
         {"kind", r.kind == StirlingKind::Second ? 2 : 1},
         {"actual", valuation_json(r.actual.str())},
         {"estimates",
          {{"mz", r.estimates.mz},
           {"smz", r.estimates.smz},
           {"amz", r.estimates.amz},
           {"samz", r.estimates.samz},
           {"mz_integral", r.estimates.mz_integral},
           {"smz_integral", r.estimates.smz_integral},
           {"mz_raw", {r.estimates.mz_raw.num, r.estimates.mz_raw.den}},
           {"smz_raw", {r.estimates.smz_raw.num, r.estimates.smz_raw.den}},
           {"pole", r.estimates.pole},
           {"shifted_pole", r.estimates.shifted_pole}}},
         {"sharp",
          {{"mzc", r.sharp.mzc},
           {"smzc", r.sharp.smzc},
           {"amzc", r.sharp.amzc},
           {"samzc", r.sharp.samzc}}},
         {"criteria",
          {{"mzc", criterion_str(r.criteria.mzc)},
           {"smzc", criterion_str(r.criteria.smzc)},
           {"amzc", criterion_str(r.criteria.amzc)},
           {"samzc", criterion_str(r.criteria.samzc)}}},
         {"agreement", r.agreement}};
  if (r.r) j["r"] = *r.r;
  return j;
}

CaseReport report_from(const json& j) {
  CaseReport r;
  r.n = j.at("n").get<unsigned long>();
  r.k = j.at("k").get<unsigned long>();
  r.p = j.at("p").get<unsigned long>();
  r.kind = j.at("kind").get<int>() == 2 ? StirlingKind::Second : StirlingKind::First;
  const std::string actual = valuation_from(j.at("actual"));
  r.actual = actual == "inf" ? Valuation::infinity() : Valuation(std::stol(actual));
  const json& e = j.at("estimates");
  r.estimates.mz = e.at("mz").get<long>();
  r.estimates.smz = e.at("smz").get<long>();
  r.estimates.amz = e.at("amz").get<long>();
  r.estimates.samz = e.at("samz").get<long>();
  r.estimates.mz_integral = e.at("mz_integral").get<bool>();
  r.estimates.smz_integral = e.at("smz_integral").get<bool>();
  r.estimates.mz_raw = {e.at("mz_raw")[0].get<long>(), e.at("mz_raw")[1].get<long>()};
  r.estimates.smz_raw = {e.at("smz_raw")[0].get<long>(), e.at("smz_raw")[1].get<long>()};
  r.estimates.pole = e.at("pole").get<long>();
  r.estimates.shifted_pole = e.at("shifted_pole").get<long>();
  const json& s = j.at("sharp");
  r.sharp = {s.at("mzc").get<bool>(), s.at("smzc").get<bool>(), s.at("amzc").get<bool>(),
             s.at("samzc").get<bool>()};
  const json& c = j.at("criteria");
  r.criteria.mzc = criterion_from(c.at("mzc").get<std::string>());
  r.criteria.smzc = criterion_from(c.at("smzc").get<std::string>());
  r.criteria.amzc = criterion_from(c.at("amzc").get<std::string>());
  r.criteria.samzc = criterion_from(c.at("samzc").get<std::string>());
  r.agreement = j.at("agreement").get<bool>();
  if (j.contains("r")) r.r = j.at("r").get<unsigned long>();
  return r;
}

}  // namespace

std::string to_json(const ValRecord& r) {
  json j{{"command", "val"}, {"kind", r.kind},           {"p", r.p}, {"n", r.n},
         {"k", r.k},         {"valuation", valuation_json(r.valuation)}};
  return j.dump(2);
}

ValRecord val_from_json(const std::string& text) {
  const json j = json::parse(text);
  ValRecord r;
  r.kind = j.at("kind").get<int>();
  r.p = j.at("p").get<unsigned long>();
  r.n = j.at("n").get<unsigned long>();
  r.k = j.at("k").get<unsigned long>();
  r.valuation = valuation_from(j.at("valuation"));
  return r;
}

std::string to_json(const MaxPoleRecord& r) {
  json vertices = json::array();
  for (auto [x, y] : r.vertices) vertices.push_back({x, y});
  json j{{"command", "maxpole"}, {"p", r.p},           {"degree", r.degree},
         {"order", r.order},     {"max_pole", r.max_pole}, {"vertices", vertices}};
  return j.dump(2);
}

MaxPoleRecord maxpole_from_json(const std::string& text) {
  const json j = json::parse(text);
  MaxPoleRecord r;
  r.p = j.at("p").get<unsigned long>();
  r.degree = j.at("degree").get<unsigned long>();
  r.order = j.at("order").get<long>();
  r.max_pole = j.at("max_pole").get<unsigned long>();
  for (const auto& v : j.at("vertices"))
    r.vertices.emplace_back(v[0].get<long>(), v[1].get<long>());
  return r;
}

std::string to_json(const PredictRecord& r) {
  json preds = json::array();
  for (const auto& p : r.predictions) preds.push_back(prediction_to_json(p));
  json j{{"command", "predict"}, {"theorem", r.theorem_id}, {"predictions", preds}};
  return j.dump(2);
}

PredictRecord predict_from_json(const std::string& text) {
  const json j = json::parse(text);
  PredictRecord r;
  r.theorem_id = j.at("theorem").get<std::string>();
  for (const auto& p : j.at("predictions")) r.predictions.push_back(prediction_from_json(p));
  return r;
}

std::string to_json(const ClassifyRecord& r) {
  json j = report_json(r.report);
  j["command"] = "classify";
  return j.dump(2);
}

ClassifyRecord classify_from_json(const std::string& text) {
  return ClassifyRecord{report_from(json::parse(text))};
}

std::vector<std::pair<std::string, AxisRange>> parse_grid(const std::string& text) {
  std::vector<std::pair<std::string, AxisRange>> grid;
  std::stringstream ss(text);
  std::string clause;
  while (std::getline(ss, clause, ';')) {
    if (clause.empty()) continue;
    const auto eq = clause.find('=');
    if (eq == std::string::npos) throw std::domain_error("grid clause needs '=': " + clause);
    const std::string axis = clause.substr(0, eq);
    std::string range = clause.substr(eq + 1);
    AxisRange r;
    const auto comma = range.find(',');
    if (comma != std::string::npos) {
      r.step = std::stol(range.substr(comma + 1));
      range = range.substr(0, comma);
    }
    const auto dots = range.find("..");
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stol(range);
    } else {
      r.lo = std::stol(range.substr(0, dots));
      r.hi = std::stol(range.substr(dots + 2));
    }
    grid.emplace_back(axis, r);
  }
  if (grid.empty()) throw std::domain_error("empty grid spec");
  return grid;
}

namespace {

struct CommonFlags {
  std::string format = "human";
};

void add_format(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));
}

void print_scan_human(const ScanReport& r, std::ostream& out) {
  out << "target=" << r.spec.target << " checked=" << r.counts.checked
      << " agree=" << r.counts.agree << " disagree=" << r.counts.disagree
      << " inapplicable=" << r.counts.inapplicable << " unknown=" << r.counts.unknown
      << "\n";
  for (const auto& s : r.statistics)
    out << "h=" << s.h << " fraction=" << s.numerator << "/" << s.denominator << " = "
        << s.fraction << "\n";
  const std::size_t shown = std::min<std::size_t>(r.mismatches.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& m = r.mismatches[i];
    out << "mismatch:";
    for (const auto& [k, v] : m.inputs) out << " " << k << "=" << v;
    out << " predicted=" << m.predicted << " actual=" << m.actual << "\n";
  }
  if (r.mismatches.size() > shown)
    out << "(" << r.mismatches.size() - shown << " more mismatches)\n";
}

void emit_scan(const ScanReport& r, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << report_to_json(r) << "\n";
  else if (format == "csv")
    out << report_to_csv(r);
  else
    print_scan_human(r, out);
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic valuations of Stirling numbers"};
  app.set_help_flag("--help", "print usage");  // keep -h free for the h exponent flag
  app.require_subcommand(1);

  // shared option storage
  unsigned long n = 0, k = 0, p = 2, c = 1, b = 0, a = 1, h = 1, L = 0, u = 1;
  int kind = 2;
  long order = 0;
  unsigned long degree = 0;
  std::string theorem, grid_text;
  unsigned long budget = 100000;
  unsigned int jobs = 1;

  CommonFlags val_fmt, classify_fmt, maxpole_fmt, predict_fmt, verify_fmt, stat_fmt,
      a2_fmt, open_fmt;

  auto* val = app.add_subcommand("val", "valuation of a Stirling number");
  val->add_option("-n", n)->required();
  val->add_option("-k", k)->required();
  val->add_option("-p", p)->required();
  val->add_option("--kind", kind)->check(CLI::IsMember({1, 2}));
  add_format(val, val_fmt);

  auto* cls = app.add_subcommand("classify", "estimates, cases and criteria");
  cls->add_option("-n", n)->required();
  cls->add_option("-k", k)->required();
  cls->add_option("-p", p)->required();
  cls->add_option("--kind", kind)->check(CLI::IsMember({1, 2}));
  add_format(cls, classify_fmt);

  auto* mp = app.add_subcommand("maxpole", "maximum pole of a higher-order Bernoulli polynomial");
  mp->add_option("-p", p)->required();
  mp->add_option("--degree", degree)->required();
  mp->add_option("--order", order)->required();
  add_format(mp, maxpole_fmt);

  auto* pr = app.add_subcommand("predict", "closed-form theorem prediction");
  pr->add_option("--theorem", theorem)->required();
  pr->add_option("-n", n);
  pr->add_option("-k", k);
  pr->add_option("-p", p);
  pr->add_option("-c", c);
  pr->add_option("-b", b);
  pr->add_option("-a", a);
  pr->add_option("--h", h);
  pr->add_option("--L", L);
  pr->add_option("--u", u);
  add_format(pr, predict_fmt);

  auto* vf = app.add_subcommand("verify", "sweep a grid against the oracle");
  vf->add_option("--theorem", theorem, "theorem id or case-agreement")->required();
  vf->add_option("--grid", grid_text)->required();
  vf->add_option("--budget", budget);
  vf->add_option("--jobs", jobs);
  add_format(vf, verify_fmt);

  auto* st = app.add_subcommand("scan-stat", "sharpness fraction statistics");
  st->add_option("-c", c)->required();
  st->add_option("--grid", grid_text, "h range, e.g. h=1..8")->required();
  st->add_option("--budget", budget);
  st->add_option("--jobs", jobs);
  add_format(st, stat_fmt);

  auto* a2 = app.add_subcommand("scan-a2", "counterexample hunt for the a=3 mod 4 formula");
  a2->add_option("--grid", grid_text)->required();
  a2->add_option("--budget", budget);
  a2->add_option("--jobs", jobs);
  add_format(a2, a2_fmt);

  auto* oq = app.add_subcommand("scan-open", "open-question probe");
  oq->add_option("--grid", grid_text)->required();
  oq->add_option("--budget", budget);
  oq->add_option("--jobs", jobs);
  add_format(oq, open_fmt);

  std::vector<const char*> argv;
  argv.push_back("stirval");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const StirlingKind sk = kind == 1 ? StirlingKind::First : StirlingKind::Second;

  if (val->parsed()) {
    ValRecord r{kind, p, n, k, stirling_valuation(n, k, p, sk).str()};
    if (val_fmt.format == "json")
      out << to_json(r) << "\n";
    else if (val_fmt.format == "csv")
      out << "n,k,p,kind,valuation\n"
          << n << "," << k << "," << p << "," << kind << "," << r.valuation << "\n";
    else
      out << r.valuation << "\n";
    return 0;
  }

  if (cls->parsed()) {
    ClassifyRecord r{classify(n, k, p, sk)};
    if (classify_fmt.format == "json") {
      out << to_json(r) << "\n";
    } else if (classify_fmt.format == "csv") {
      const auto& rep = r.report;
      out << "n,k,p,kind,actual,mz,smz,amz,samz,mzc,smzc,amzc,samzc,agreement\n"
          << rep.n << "," << rep.k << "," << rep.p << "," << kind << ","
          << rep.actual.str() << "," << rep.estimates.mz << "," << rep.estimates.smz << ","
          << rep.estimates.amz << "," << rep.estimates.samz << "," << rep.sharp.mzc << ","
          << rep.sharp.smzc << "," << rep.sharp.amzc << "," << rep.sharp.samzc << ","
          << rep.agreement << "\n";
    } else {
      const auto& rep = r.report;
      out << "n=" << rep.n << " k=" << rep.k << " p=" << rep.p << " kind=" << kind << "\n";
      out << "actual = " << rep.actual << "\n";
      out << "mz   = " << rep.estimates.mz << (rep.estimates.mz_integral ? "" : " (raw)")
          << "  sharp=" << rep.sharp.mzc << " criterion=" << criterion_str(rep.criteria.mzc)
          << "\n";
      out << "smz  = " << rep.estimates.smz << "  sharp=" << rep.sharp.smzc
          << " criterion=" << criterion_str(rep.criteria.smzc) << "\n";
      out << "amz  = " << rep.estimates.amz << "  sharp=" << rep.sharp.amzc
          << " criterion=" << criterion_str(rep.criteria.amzc) << "\n";
      out << "samz = " << rep.estimates.samz << "  sharp=" << rep.sharp.samzc
          << " criterion=" << criterion_str(rep.criteria.samzc) << "\n";
      out << "agreement = " << (rep.agreement ? "yes" : "no") << "\n";
    }
    return 0;
  }

  if (mp->parsed()) {
    MaxPoleRecord r;
    r.p = p;
    r.degree = degree;
    r.order = order;
    r.max_pole = max_pole(degree, order, p);
    r.vertices = predicted_polygon(degree, order, p);
    if (maxpole_fmt.format == "json") {
      out << to_json(r) << "\n";
    } else if (maxpole_fmt.format == "csv") {
      out << "p,degree,order,max_pole\n"
          << p << "," << degree << "," << order << "," << r.max_pole << "\n";
    } else {
      out << r.max_pole << "\n";
    }
    return 0;
  }

  if (pr->parsed()) {
    TheoremInputs inputs;
    if (pr->count("-n")) inputs.n = n;
    if (pr->count("-k")) inputs.k = k;
    if (pr->count("-p")) inputs.p = p;
    if (pr->count("-c")) inputs.c = c;
    if (pr->count("-b")) inputs.b = b;
    if (pr->count("-a")) inputs.a = a;
    if (pr->count("--h")) inputs.h = h;
    if (pr->count("--L")) inputs.L = L;
    if (pr->count("--u")) inputs.u = u;
    PredictRecord r{theorem, predict(theorem, inputs)};
    if (predict_fmt.format == "json") {
      out << to_json(r) << "\n";
    } else if (predict_fmt.format == "csv") {
      out << "theorem,applicable,kind,predicted,n,k,p\n";
      for (const auto& t : r.predictions) {
        out << t.theorem_id << "," << t.applicable << ","
            << (t.kind == PredictionKind::Exact        ? "exact"
                : t.kind == PredictionKind::LowerBound ? "lower_bound"
                                                       : "limit_only")
            << ",";
        if (t.applicable)
          out << t.predicted << "," << t.target_n << "," << t.target_k << "," << t.p;
        else
          out << ",,,";
        out << "\n";
      }
    } else {
      for (const auto& t : r.predictions) {
        if (!t.applicable) {
          out << "inapplicable: " << t.reason << "\n";
        } else if (t.kind == PredictionKind::Exact) {
          out << t.predicted << " (applicable)\n";
        } else if (t.kind == PredictionKind::LowerBound) {
          out << ">=" << t.predicted << " (applicable, lower bound)\n";
        } else {
          out << t.predicted << " (limit only, attainment bound not met)\n";
        }
      }
    }
    return 0;
  }

  ScanSpec spec;
  spec.oracle_budget = budget;
  spec.jobs = jobs;

  if (vf->parsed()) {
    spec.target = theorem;
    spec.grid = parse_grid(grid_text);
    emit_scan(verify(spec, verify_fmt.format == "csv"), verify_fmt.format, out);
    return 0;
  }
  if (st->parsed()) {
    const auto grid = parse_grid(grid_text);
    if (grid.size() != 1 || grid[0].first != "h")
      throw std::domain_error("scan-stat takes a single h axis");
    emit_scan(scan_conjecture_stat(c, grid[0].second, budget, jobs), stat_fmt.format, out);
    return 0;
  }
  if (a2->parsed()) {
    spec.grid = parse_grid(grid_text);
    emit_scan(scan_conjecture_a2(spec, a2_fmt.format == "csv"), a2_fmt.format, out);
    return 0;
  }
  if (oq->parsed()) {
    spec.grid = parse_grid(grid_text);
    emit_scan(scan_open_question(spec, open_fmt.format == "csv"), open_fmt.format, out);
    return 0;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const resource_error& e) {
    err << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace stirval::cli
