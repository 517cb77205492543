#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "stirval/valuation.hpp"

namespace stirval {

enum class StirlingKind {
  First,   // unsigned first kind
  Second,
};

struct StirlingLimits {
  unsigned long exact_cap = 400;     // largest n for exact big-integer values
  unsigned long precision_cap = 1u << 16;  // hard cap on modular precision K
};

/// Exact S(n,k) (Second) or unsigned s(n,k) (First) by the triangle
/// recurrences.  Throws resource_error for n above the cap.
mpz_class stirling_exact(unsigned long n, unsigned long k, StirlingKind kind,
                         const StirlingLimits& limits = {});

/// Streams the exact triangle row by row: visit(n, row) with row[k] the
/// Stirling number, for n = 0..n_max.  Rows are reused storage.
void stirling_exact_rows(unsigned long n_max, StirlingKind kind,
                         const std::function<void(unsigned long, const std::vector<mpz_class>&)>& visit,
                         const StirlingLimits& limits = {});

/// Exact nu_p of the Stirling number.  Second kind: alternating-sum formula
/// modulo p^K with K = nu_p(k!) + K0, doubling K0 until the residue is
/// nonzero.  First kind: row recurrence modulo p^K with the same lifting
/// loop.  k > n (or 0 = k < n) gives infinity.
Valuation stirling_valuation(unsigned long n, unsigned long k, unsigned long p,
                             StirlingKind kind, const StirlingLimits& limits = {});

/// Valuations for many (n,k) points of one kind and prime, via a single
/// triangle sweep modulo a machine-word power of p.  Points whose valuation
/// exceeds the word-size precision fall back to stirling_valuation.
/// Results are positionally aligned with `points`.
std::vector<Valuation> stirling_valuation_batch(
    const std::vector<std::pair<unsigned long, unsigned long>>& points,
    unsigned long p, StirlingKind kind, const StirlingLimits& limits = {});

}  // namespace stirval
