#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "stirval/valuation.hpp"

namespace stirval {

struct BernoulliLimits {
  unsigned long degree_cap = 40;  // partition enumeration stays feasible
};

/// Higher-order Bernoulli number B_n^{(l)}, exact, by the partition sum over
/// all partitions of weight <= n.  Throws resource_error above the cap.
mpq_class hob_number(unsigned long n, long l, const BernoulliLimits& limits = {});

/// B_n^{(l)}(1), exact, by the partition sum restricted to weight == n.
mpq_class hob_at_one(unsigned long n, long l, const BernoulliLimits& limits = {});

/// Valuations of the coefficients of the monic degree-n polynomial
/// B_n^{(l)}(x); valuations[i] belongs to the coefficient of x^{n-i}.
struct CoefficientProfile {
  unsigned long n = 0;
  long l = 0;
  unsigned long p = 2;
  std::vector<Valuation> valuations;

  /// Largest pole order among the coefficients (0 when none is negative).
  long max_pole() const;
};

CoefficientProfile coefficient_profile(unsigned long n, long l, unsigned long p,
                                       const BernoulliLimits& limits = {});

/// Vertices of the lower convex hull of {(i, valuations[i])}, infinite points
/// skipped.  The first vertex is (0, 0) since the polynomial is monic.
std::vector<std::pair<long, long>> newton_polygon(const CoefficientProfile& profile);

/// True when (x, y) lies on the polyline through the polygon vertices.
bool on_polygon(const std::vector<std::pair<long, long>>& vertices, long x, long y);

/// True when the polygon is strictly decreasing through all its vertices.
bool strictly_decreasing(const std::vector<std::pair<long, long>>& vertices);

}  // namespace stirval
