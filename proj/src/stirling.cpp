#include "stirval/stirling.hpp"

#include <algorithm>
#include <stdexcept>

#include "stirval/basep.hpp"
#include "stirval/numeric.hpp"

namespace stirval {

namespace {

void check_args(unsigned long k, unsigned long p) {
  (void)k;
  require_prime(p);
}

// Trivial boundary values shared by all valuation paths.  Returns true when
// the valuation is already decided.
bool boundary_valuation(unsigned long n, unsigned long k, Valuation& out) {
  if (k > n) {
    out = Valuation::infinity();
    return true;
  }
  if (k == 0) {
    out = (n == 0) ? Valuation(0) : Valuation::infinity();
    return true;
  }
  if (k == n) {
    out = Valuation(0);
    return true;
  }
  return false;
}

}  // namespace

mpz_class stirling_exact(unsigned long n, unsigned long k, StirlingKind kind,
                         const StirlingLimits& limits) {
  if (n > limits.exact_cap)
    throw resource_error("stirling_exact: n exceeds exact cap " +
                         std::to_string(limits.exact_cap));
  if (k > n) return 0;
  mpz_class result;
  stirling_exact_rows(
      n, kind,
      [&](unsigned long row_n, const std::vector<mpz_class>& row) {
        if (row_n == n) result = row[k];
      },
      limits);
  return result;
}

void stirling_exact_rows(unsigned long n_max, StirlingKind kind,
                         const std::function<void(unsigned long, const std::vector<mpz_class>&)>& visit,
                         const StirlingLimits& limits) {
  if (n_max > limits.exact_cap)
    throw resource_error("stirling_exact_rows: n exceeds exact cap " +
                         std::to_string(limits.exact_cap));
  std::vector<mpz_class> row(n_max + 1, mpz_class(0));
  row[0] = 1;
  visit(0, row);
  for (unsigned long n = 1; n <= n_max; ++n) {
    for (unsigned long j = n; j >= 1; --j) {
      // S(n,j) = S(n-1,j-1) + j S(n-1,j);  c(n,j) = c(n-1,j-1) + (n-1) c(n-1,j)
      unsigned long factor = kind == StirlingKind::Second ? j : n - 1;
      row[j] = row[j - 1] + factor * row[j];
    }
    row[0] = 0;
    visit(n, row);
  }
}

namespace {

Valuation valuation_second(unsigned long n, unsigned long k, unsigned long p,
                           const StirlingLimits& limits) {
  const std::uint64_t vk = factorial_valuation(k, p);
  for (unsigned long extra = 64;; extra *= 2) {
    const unsigned long precision = static_cast<unsigned long>(vk) + extra;
    if (precision > limits.precision_cap)
      throw resource_error("stirling_valuation: precision exceeds cap");
    const mpz_class modulus = pow_ui(p, precision);
    // k! S(n,k) = sum_{i=0..k} (-1)^i binom(k,i) (k-i)^n
    mpz_class sum = 0, binom = 1, term, base;
    for (unsigned long i = 0; i <= k; ++i) {
      base = k - i;
      mpz_powm_ui(term.get_mpz_t(), base.get_mpz_t(), n, modulus.get_mpz_t());
      term *= binom % modulus;
      sum += (i % 2 == 0) ? term : -term;
      mpz_mod(sum.get_mpz_t(), sum.get_mpz_t(), modulus.get_mpz_t());
      if (i < k) {
        binom *= k - i;
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), i + 1);
      }
    }
    if (sum != 0)
      return Valuation(int_valuation(sum, p).value() - static_cast<long>(vk));
  }
}

Valuation valuation_first(unsigned long n, unsigned long k, unsigned long p,
                          const StirlingLimits& limits) {
  for (unsigned long precision = 64;; precision *= 2) {
    if (precision > limits.precision_cap)
      throw resource_error("stirling_valuation: precision exceeds cap");
    const mpz_class modulus = pow_ui(p, precision);
    std::vector<mpz_class> row(k + 1, mpz_class(0));
    row[0] = 1;
    for (unsigned long m = 1; m <= n; ++m) {
      for (unsigned long j = std::min<unsigned long>(k, m); j >= 1; --j) {
        row[j] = row[j - 1] + (m - 1) * row[j];
        mpz_mod(row[j].get_mpz_t(), row[j].get_mpz_t(), modulus.get_mpz_t());
      }
      row[0] = 0;
    }
    if (row[k] != 0) return int_valuation(row[k], p);
  }
}

}  // namespace

Valuation stirling_valuation(unsigned long n, unsigned long k, unsigned long p,
                             StirlingKind kind, const StirlingLimits& limits) {
  check_args(k, p);
  Valuation out;
  if (boundary_valuation(n, k, out)) return out;
  return kind == StirlingKind::Second ? valuation_second(n, k, p, limits)
                                      : valuation_first(n, k, p, limits);
}

namespace {

// Montgomery arithmetic modulo an odd word-sized modulus.
struct Montgomery {
  std::uint64_t mod, inv, r2;  // inv = -mod^{-1} mod 2^64, r2 = 2^128 mod mod

  explicit Montgomery(std::uint64_t m) : mod(m) {
    std::uint64_t x = m;  // Newton iteration for m^{-1} mod 2^64 (m odd)
    for (int i = 0; i < 6; ++i) x *= 2 - m * x;
    inv = ~x + 1;
    const std::uint64_t r = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(1) << 64) % m);
    r2 = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * r % m);
  }

  std::uint64_t redc(unsigned __int128 t) const {
    std::uint64_t m1 = static_cast<std::uint64_t>(t) * inv;
    unsigned __int128 s = t + static_cast<unsigned __int128>(m1) * mod;
    std::uint64_t r = static_cast<std::uint64_t>(s >> 64);
    return r >= mod ? r - mod : r;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return redc(static_cast<unsigned __int128>(a) * b);
  }
  std::uint64_t to_mont(std::uint64_t a) const { return mul(a % mod, r2); }
  std::uint64_t from_mont(std::uint64_t a) const { return redc(a); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= mod ? s - mod : s;
  }
};

long word_valuation(std::uint64_t r, unsigned long p) {
  long v = 0;
  while (r % p == 0) {
    r /= p;
    ++v;
  }
  return v;
}

// Largest exponent m with p^m < 2^62.
unsigned long word_precision(unsigned long p) {
  unsigned long m = 0;
  unsigned __int128 pw = 1;
  while (pw * p < (static_cast<unsigned __int128>(1) << 62)) {
    pw *= p;
    ++m;
  }
  return m;
}

}  // namespace

std::vector<Valuation> stirling_valuation_batch(
    const std::vector<std::pair<unsigned long, unsigned long>>& points,
    unsigned long p, StirlingKind kind, const StirlingLimits& limits) {
  require_prime(p);
  std::vector<Valuation> result(points.size());

  // Boundary points are answered directly; the rest are grouped by n.
  std::vector<std::size_t> order;
  unsigned long n_max = 0, k_max = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto [n, k] = points[i];
    if (boundary_valuation(n, k, result[i])) continue;
    order.push_back(i);
    n_max = std::max(n_max, n);
    k_max = std::max(k_max, k);
  }
  if (order.empty()) return result;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return points[a].first < points[b].first;
  });

  const unsigned long prec = word_precision(p);
  const bool power_of_two = (p == 2);
  const std::uint64_t mod2 = power_of_two ? (static_cast<std::uint64_t>(1) << 62) : 0;
  std::uint64_t modulus = 1;
  for (unsigned long i = 0; i < prec; ++i) modulus *= p;
  const Montgomery mont(power_of_two ? 3 : modulus);  // unused for p == 2

  std::vector<std::uint64_t> row(k_max + 1, 0);
  std::vector<std::uint64_t> col_factor;
  if (kind == StirlingKind::Second) {
    col_factor.resize(k_max + 1);
    for (unsigned long j = 0; j <= k_max; ++j)
      col_factor[j] = power_of_two ? j : mont.to_mont(j);
  }
  row[0] = power_of_two ? 1 : mont.to_mont(1);

  std::size_t next = 0;
  auto flush_row = [&](unsigned long n) {
    for (; next < order.size() && points[order[next]].first == n; ++next) {
      unsigned long k = points[order[next]].second;
      std::uint64_t residue = power_of_two ? row[k] : mont.from_mont(row[k]);
      if (residue == 0) {
        // valuation at or above the word precision: take the exact path
        result[order[next]] = stirling_valuation(n, k, p, kind, limits);
      } else {
        result[order[next]] = Valuation(word_valuation(residue, p));
      }
    }
  };

  flush_row(0);
  for (unsigned long n = 1; n <= n_max && next < order.size(); ++n) {
    const unsigned long hi = std::min<unsigned long>(k_max, n);
    if (power_of_two) {
      const std::uint64_t mask = mod2 - 1;
      const std::uint64_t row_factor = (n - 1) & mask;
      for (unsigned long j = hi; j >= 1; --j) {
        std::uint64_t f = kind == StirlingKind::Second ? col_factor[j] : row_factor;
        row[j] = (row[j - 1] + f * row[j]) & mask;
      }
    } else {
      const std::uint64_t row_factor = mont.to_mont(n - 1);
      for (unsigned long j = hi; j >= 1; --j) {
        std::uint64_t f = kind == StirlingKind::Second ? col_factor[j] : row_factor;
        row[j] = mont.add(row[j - 1], mont.mul(f, row[j]));
      }
    }
    row[0] = 0;
    flush_row(n);
  }
  return result;
}

}  // namespace stirval
