#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <vector>

namespace stirval {

/// A partition in multiplicity form: mult[i] is the number of parts equal
/// to i+1.  Weight w = sum (i+1)*mult[i], part count d = sum mult[i].
struct Partition {
  std::vector<unsigned> mult;

  unsigned long weight() const;
  unsigned long parts() const;

  /// Multiplicity of part i (1-based).
  unsigned multiplicity(unsigned long part) const {
    return part >= 1 && part <= mult.size() ? mult[part - 1] : 0;
  }

  static Partition of(std::initializer_list<std::pair<unsigned long, unsigned>> parts);
};

/// Visits every partition of weight w exactly once.
void for_each_partition(unsigned long w, const std::function<void(const Partition&)>& visit);

/// d! / prod_i (mult[i]!)  — the multinomial weight of the partition.
mpz_class multinomial(const Partition& u);

/// Lambda^u = prod_i (i+1)^{mult[i]}.
mpz_class lambda_power(const Partition& u);

/// nu_p(Lambda^u) = sum_i mult[i] * nu_p(i+1).
unsigned long partition_valuation(const Partition& u, unsigned long p);

/// t_u(s) = binom(s, d) * multinomial(u) / Lambda^u, exact, s any integer.
mpq_class t_u(const Partition& u, std::int64_t s);

/// tau_u(s) = (n)_w * t_u(s).  Throws std::domain_error when w > n.
mpq_class tau_u(const Partition& u, std::int64_t s, unsigned long n);

}  // namespace stirval
