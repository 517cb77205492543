#include "stirval/bernoulli.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "stirval/basep.hpp"
#include "stirval/numeric.hpp"
#include "stirval/partitions.hpp"

namespace stirval {

namespace {

// Partition sums grouped by part count:
//   by_weight[w][d]  = sum of multinomial(u)/Lambda^u over partitions u with
//                      weight w and d parts,
//   cumulative[w][d] = the same over all weights <= w.
// The partition-sum formulas for B_n^{(l)} and B_n^{(l)}(1) then reduce to one
// generalized binomial per part count, with the tables shared across orders.
class SumTables {
 public:
  static SumTables& instance() {
    static SumTables tables;
    return tables;
  }

  std::mutex mutex;  // guards everything below
  std::vector<std::vector<mpq_class>> by_weight;
  std::vector<std::vector<mpq_class>> cumulative;
  std::map<std::pair<unsigned long, long>, mpq_class> number_memo;
  std::map<std::pair<unsigned long, long>, mpq_class> at_one_memo;

  void extend(unsigned long w_max) {
    for (unsigned long w = by_weight.size(); w <= w_max; ++w) {
      std::vector<mpq_class> row(w + 1, mpq_class(0));
      for_each_partition(w, [&](const Partition& u) {
        mpq_class term(multinomial(u), lambda_power(u));
        term.canonicalize();
        row[u.parts()] += term;
      });
      std::vector<mpq_class> cum(w + 1, mpq_class(0));
      if (w > 0) {
        const auto& prev = cumulative[w - 1];
        for (unsigned long d = 0; d < prev.size(); ++d) cum[d] = prev[d];
      }
      for (unsigned long d = 0; d <= w; ++d) cum[d] += row[d];
      by_weight.push_back(std::move(row));
      cumulative.push_back(std::move(cum));
    }
  }
};

void check_cap(unsigned long n, const BernoulliLimits& limits) {
  if (n > limits.degree_cap)
    throw resource_error("higher-order Bernoulli degree exceeds cap " +
                         std::to_string(limits.degree_cap));
}

mpq_class evaluate(unsigned long n, long l, bool at_one) {
  auto& tables = SumTables::instance();
  std::scoped_lock lock(tables.mutex);
  auto& memo = at_one ? tables.at_one_memo : tables.number_memo;
  auto key = std::make_pair(n, l);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  tables.extend(n);
  const std::int64_t s = static_cast<std::int64_t>(l) - static_cast<std::int64_t>(n) - 1;
  const auto& row = at_one ? tables.by_weight[n] : tables.cumulative[n];
  mpq_class sum = 0;
  for (unsigned long d = 0; d <= n; ++d) {
    if (row[d] != 0) sum += mpq_class(gen_binomial(s, d)) * row[d];
  }
  mpq_class result = mpq_class(factorial(n)) * sum;
  if (n % 2 == 1) result = -result;
  memo.emplace(key, result);
  return result;
}

}  // namespace

mpq_class hob_number(unsigned long n, long l, const BernoulliLimits& limits) {
  check_cap(n, limits);
  return evaluate(n, l, /*at_one=*/false);
}

mpq_class hob_at_one(unsigned long n, long l, const BernoulliLimits& limits) {
  check_cap(n, limits);
  return evaluate(n, l, /*at_one=*/true);
}

long CoefficientProfile::max_pole() const {
  long pole = 0;
  for (auto v : valuations)
    if (!v.is_infinite()) pole = std::max(pole, -v.value());
  return pole;
}

CoefficientProfile coefficient_profile(unsigned long n, long l, unsigned long p,
                                       const BernoulliLimits& limits) {
  check_cap(n, limits);
  require_prime(p);
  CoefficientProfile profile{n, l, p, {}};
  profile.valuations.reserve(n + 1);
  for (unsigned long i = 0; i <= n; ++i) {
    mpq_class coeff = mpq_class(binomial(n, i)) * hob_number(i, l, limits);
    profile.valuations.push_back(rational_valuation(coeff, p));
  }
  return profile;
}

namespace {

long cross(std::pair<long, long> o, std::pair<long, long> a, std::pair<long, long> b) {
  return (a.first - o.first) * (b.second - o.second) -
         (a.second - o.second) * (b.first - o.first);
}

}  // namespace

std::vector<std::pair<long, long>> newton_polygon(const CoefficientProfile& profile) {
  std::vector<std::pair<long, long>> hull;
  for (unsigned long i = 0; i < profile.valuations.size(); ++i) {
    Valuation v = profile.valuations[i];
    if (v.is_infinite()) continue;
    std::pair<long, long> pt{static_cast<long>(i), v.value()};
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
      hull.pop_back();
    hull.push_back(pt);
  }
  return hull;
}

bool on_polygon(const std::vector<std::pair<long, long>>& vertices, long x, long y) {
  if (vertices.empty()) return false;
  if (vertices.size() == 1) return vertices[0] == std::make_pair(x, y);
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    auto [x1, y1] = vertices[i];
    auto [x2, y2] = vertices[i + 1];
    if (x < x1 || x > x2) continue;
    if ((x2 - x1) * (y - y1) == (y2 - y1) * (x - x1)) return true;
  }
  return false;
}

bool strictly_decreasing(const std::vector<std::pair<long, long>>& vertices) {
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (vertices[i + 1].second >= vertices[i].second) return false;
  return true;
}

}  // namespace stirval
