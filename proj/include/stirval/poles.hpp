#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace stirval {

/// Greedy chain of digit-sum-(p-1) segments predicting the poles of the
/// degree-n order-l higher-order Bernoulli polynomial without computing any
/// coefficient.  links[j-1] = N_j; the pole of order j first occurs in degree
/// n - (N_1 + ... + N_j).  skips[j-1] is the bottom segment passed over
/// before N_j was cut.
struct KimuraChain {
  unsigned long p = 2;
  std::uint64_t degree = 0;
  std::int64_t s = 0;  // order - degree - 1
  std::vector<std::uint64_t> links;
  std::vector<std::uint64_t> skips;
  /// Set when some candidate hit a vanishing binomial (0 <= s < N/(p-1)); the
  /// candidate is then rejected under the generalized-binomial convention.
  bool saw_vanishing_binomial = false;

  unsigned long length() const { return static_cast<unsigned long>(links.size()); }

  /// Descending Newton-polygon vertices (0,0), (N_1, -1), (N_1+N_2, -2), ...
  /// in degree-offset coordinates.
  std::vector<std::pair<long, long>> vertices() const;
};

/// Kimura N-function: the least-value segment of the base-p expansion of n
/// with digit sum exactly p-1 (contiguous digit window, partial count allowed
/// at the window's top digit).  nullopt when s_p(n) < p-1.
std::optional<std::uint64_t> kimura_N(std::uint64_t n, unsigned long p);

KimuraChain kimura_chain(std::uint64_t degree, std::int64_t order, unsigned long p);

/// Maximum pole of B_degree^{(order)}(x): the length of the Kimura chain.
unsigned long max_pole(std::uint64_t degree, std::int64_t order, unsigned long p);

/// p = 2 shortcuts.  Second kind, for S(n,k): the maximum pole of
/// B_{n-k}^{(-k)}(x) is #([n-k] - [n]); the shifted companion (order -k+1)
/// is #([n-k] - [n-1]).
unsigned long max_pole_2_second_kind(std::uint64_t n, std::uint64_t k);
unsigned long max_pole_2_second_kind_shifted(std::uint64_t n, std::uint64_t k);

/// First kind, for s(n,k): the maximum pole of B_{n-k}^{(n)}(x) is
/// #([k-1] & [n-k]); the shifted companion (order n+1) is #([k] & [n-k]).
unsigned long max_pole_2_first_kind(std::uint64_t n, std::uint64_t k);
unsigned long max_pole_2_first_kind_shifted(std::uint64_t n, std::uint64_t k);

/// Chain-predicted descending portion of the Newton polygon.
std::vector<std::pair<long, long>> predicted_polygon(std::uint64_t degree,
                                                     std::int64_t order, unsigned long p);

}  // namespace stirval
