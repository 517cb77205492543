#include "stirval/partitions.hpp"

#include <stdexcept>

#include "stirval/basep.hpp"
#include "stirval/numeric.hpp"

namespace stirval {

unsigned long Partition::weight() const {
  unsigned long w = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) w += (i + 1) * mult[i];
  return w;
}

unsigned long Partition::parts() const {
  unsigned long d = 0;
  for (auto m : mult) d += m;
  return d;
}

Partition Partition::of(std::initializer_list<std::pair<unsigned long, unsigned>> parts) {
  Partition u;
  for (auto [part, count] : parts) {
    if (part == 0) throw std::domain_error("partition parts are >= 1");
    if (u.mult.size() < part) u.mult.resize(part, 0);
    u.mult[part - 1] += count;
  }
  return u;
}

namespace {

void enumerate(unsigned long remaining, unsigned long max_part, Partition& u,
               const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(u);
    return;
  }
  for (unsigned long part = std::min(max_part, remaining); part >= 1; --part) {
    ++u.mult[part - 1];
    enumerate(remaining - part, part, u, visit);
    --u.mult[part - 1];
  }
}

}  // namespace

void for_each_partition(unsigned long w, const std::function<void(const Partition&)>& visit) {
  Partition u;
  u.mult.assign(w == 0 ? 0 : w, 0);
  enumerate(w, w, u, visit);
}

mpz_class multinomial(const Partition& u) {
  mpz_class r = factorial(u.parts());
  for (auto m : u.mult)
    if (m > 1) mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), factorial(m).get_mpz_t());
  return r;
}

mpz_class lambda_power(const Partition& u) {
  mpz_class r = 1;
  for (std::size_t i = 0; i < u.mult.size(); ++i)
    if (u.mult[i] > 0) r *= pow_ui(static_cast<unsigned long>(i + 2), u.mult[i]);
  return r;
}

unsigned long partition_valuation(const Partition& u, unsigned long p) {
  unsigned long v = 0;
  for (std::size_t i = 0; i < u.mult.size(); ++i)
    if (u.mult[i] > 0) v += u.mult[i] * int_valuation(std::uint64_t(i + 2), p).value();
  return v;
}

mpq_class t_u(const Partition& u, std::int64_t s) {
  const unsigned long d = u.parts();
  mpq_class r(gen_binomial(s, d) * multinomial(u), lambda_power(u));
  r.canonicalize();
  return r;
}

mpq_class tau_u(const Partition& u, std::int64_t s, unsigned long n) {
  const unsigned long w = u.weight();
  if (w > n) throw std::domain_error("tau_u: partition weight exceeds n");
  return mpq_class(falling_factorial(n, w)) * t_u(u, s);
}

}  // namespace stirval
