#include "stirval/poles.hpp"

#include <bit>

#include "stirval/basep.hpp"

namespace stirval {

std::vector<std::pair<long, long>> KimuraChain::vertices() const {
  std::vector<std::pair<long, long>> out;
  out.reserve(links.size() + 1);
  out.emplace_back(0, 0);
  long acc = 0;
  for (std::size_t j = 0; j < links.size(); ++j) {
    acc += static_cast<long>(links[j]);
    out.emplace_back(acc, -static_cast<long>(j + 1));
  }
  return out;
}

std::optional<std::uint64_t> kimura_N(std::uint64_t n, unsigned long p) {
  require_prime(p);
  if (n == 0) return std::nullopt;
  std::vector<unsigned> digits;
  for (std::uint64_t rest = n; rest > 0; rest /= p)
    digits.push_back(static_cast<unsigned>(rest % p));

  // For a fixed start position the cheapest digit-sum-(p-1) segment takes
  // digits greedily upward, reducing only the topmost one; distinct starts
  // give distinct values, so the minimum over starts is the minimum overall.
  std::optional<std::uint64_t> best;
  for (std::size_t a = 0; a < digits.size(); ++a) {
    if (digits[a] == 0) continue;
    unsigned long need = p - 1;
    std::uint64_t value = 0, pw = 1;
    for (std::size_t i = 0; i < a; ++i) pw *= p;
    for (std::size_t i = a; i < digits.size() && need > 0; ++i, pw *= p) {
      unsigned long take = digits[i] < need ? digits[i] : need;
      value += take * pw;
      need -= take;
    }
    if (need == 0 && (!best || value < *best)) best = value;
  }
  return best;
}

KimuraChain kimura_chain(std::uint64_t degree, std::int64_t order, unsigned long p) {
  require_prime(p);
  KimuraChain chain;
  chain.p = p;
  chain.degree = degree;
  chain.s = order - static_cast<std::int64_t>(degree) - 1;

  std::uint64_t rest = degree;
  for (;;) {
    // Smallest bottom segment S of the rest whose removal leaves a Kimura
    // segment N with p not dividing binom(s, N/(p-1)).
    std::optional<std::pair<std::uint64_t, std::uint64_t>> found;  // (S, N)
    const unsigned long sigma = digit_sum(rest, p);
    for (unsigned long t = 0; t + (p - 1) <= sigma; ++t) {
      const std::uint64_t skip = *bottom_units(rest, p, t);
      const auto n_seg = kimura_N(rest - skip, p);
      if (!n_seg) break;
      const Valuation v = gen_binom_valuation(chain.s, *n_seg / (p - 1), p);
      if (v.is_infinite()) chain.saw_vanishing_binomial = true;
      if (v == 0) {
        found = {skip, *n_seg};
        break;
      }
    }
    if (!found) break;
    chain.skips.push_back(found->first);
    chain.links.push_back(found->second);
    rest -= found->first + found->second;
  }
  return chain;
}

unsigned long max_pole(std::uint64_t degree, std::int64_t order, unsigned long p) {
  return kimura_chain(degree, order, p).length();
}

unsigned long max_pole_2_second_kind(std::uint64_t n, std::uint64_t k) {
  return static_cast<unsigned long>(std::popcount((n - k) & ~n));
}

unsigned long max_pole_2_second_kind_shifted(std::uint64_t n, std::uint64_t k) {
  return static_cast<unsigned long>(std::popcount((n - k) & ~(n - 1)));
}

unsigned long max_pole_2_first_kind(std::uint64_t n, std::uint64_t k) {
  return static_cast<unsigned long>(std::popcount((k - 1) & (n - k)));
}

unsigned long max_pole_2_first_kind_shifted(std::uint64_t n, std::uint64_t k) {
  return static_cast<unsigned long>(std::popcount(k & (n - k)));
}

std::vector<std::pair<long, long>> predicted_polygon(std::uint64_t degree,
                                                     std::int64_t order, unsigned long p) {
  return kimura_chain(degree, order, p).vertices();
}

}  // namespace stirval
