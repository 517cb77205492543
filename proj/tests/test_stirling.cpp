#include <doctest.h>

#include "stirval/basep.hpp"
#include "stirval/stirling.hpp"

using namespace stirval;

TEST_CASE("exact Stirling values") {
  CHECK(stirling_exact(4, 3, StirlingKind::Second) == 6);
  CHECK(stirling_exact(5, 3, StirlingKind::Second) == 25);
  CHECK(stirling_exact(8, 6, StirlingKind::First) == 322);
  CHECK(stirling_exact(8, 3, StirlingKind::First) == 13132);
  CHECK(stirling_exact(6, 2, StirlingKind::Second) == 31);
  CHECK(stirling_exact(5, 7, StirlingKind::Second) == 0);
  CHECK(stirling_exact(0, 0, StirlingKind::Second) == 1);
  CHECK_THROWS_AS(stirling_exact(401, 3, StirlingKind::Second), resource_error);
}

TEST_CASE("valuations of the worked large examples") {
  CHECK(stirling_valuation(4131, 241, 3, StirlingKind::Second) == 4);
  CHECK(stirling_valuation(28750, 622, 5, StirlingKind::Second) == 3);
  CHECK(stirling_valuation(2900, 348, 5, StirlingKind::Second) == 2);
  CHECK(stirling_valuation(100, 45, 3, StirlingKind::Second) == 2);
  CHECK(stirling_valuation(3, 5, 2, StirlingKind::Second).is_infinite());
  CHECK(stirling_valuation(7, 0, 2, StirlingKind::Second).is_infinite());
  CHECK(stirling_valuation(9, 9, 7, StirlingKind::Second) == 0);
}

TEST_CASE("modular valuation path agrees with exact trial division") {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    for (StirlingKind kind : {StirlingKind::Second, StirlingKind::First}) {
      stirling_exact_rows(60, kind, [&](unsigned long n, const std::vector<mpz_class>& row) {
        if (n == 0) return;
        for (unsigned long k = 1; k <= n; ++k) {
          REQUIRE(stirling_valuation(n, k, p, kind) == int_valuation(row[k], p));
        }
      });
    }
  }
}

TEST_CASE("batch sweep agrees with exact trial division up to 200") {
  std::vector<std::pair<unsigned long, unsigned long>> points;
  for (unsigned long n = 1; n <= 200; ++n)
    for (unsigned long k = 1; k <= n; ++k) points.emplace_back(n, k);

  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    for (StirlingKind kind : {StirlingKind::Second, StirlingKind::First}) {
      const auto vals = stirling_valuation_batch(points, p, kind);
      std::size_t idx = 0;
      stirling_exact_rows(200, kind, [&](unsigned long n, const std::vector<mpz_class>& row) {
        if (n == 0) return;
        for (unsigned long k = 1; k <= n; ++k, ++idx) {
          REQUIRE(vals[idx] == int_valuation(row[k], p));
        }
      });
    }
  }
}

TEST_CASE("batch sweep handles boundary points") {
  std::vector<std::pair<unsigned long, unsigned long>> pts{
      {3, 5}, {7, 0}, {4, 4}, {10, 2}, {0, 0}};
  const auto vals = stirling_valuation_batch(pts, 2, StirlingKind::Second);
  CHECK(vals[0].is_infinite());
  CHECK(vals[1].is_infinite());
  CHECK(vals[2] == 0);
  CHECK(vals[3] == 0);  // S(10,2) = 511
  CHECK(vals[4] == 0);
}

TEST_CASE("power-of-two rows have valuation s_2(k) - 1") {
  for (unsigned long h = 0; h <= 10; ++h) {
    const unsigned long n = 1ul << h;
    std::vector<std::pair<unsigned long, unsigned long>> pts;
    for (unsigned long k = 1; k <= n; ++k) pts.emplace_back(n, k);
    const auto vals = stirling_valuation_batch(pts, 2, StirlingKind::Second);
    for (unsigned long k = 1; k <= n; ++k)
      REQUIRE(vals[k - 1] == static_cast<long>(digit_sum(std::uint64_t(k), 2)) - 1);
  }
}

TEST_CASE("lower-bound inequalities hold on the full small grid") {
  // second kind: nu_2 >= s_2(k) - s_2(n); for odd p the same bound divided by
  // p-1 whenever p-1 | n-k
  std::vector<std::pair<unsigned long, unsigned long>> points;
  for (unsigned long n = 1; n <= 300; ++n)
    for (unsigned long k = 1; k <= n; ++k) points.emplace_back(n, k);
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    const auto vals = stirling_valuation_batch(points, p, StirlingKind::Second);
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto [n, k] = points[i];
      if ((n - k) % (p - 1) != 0) continue;
      const long bound = (static_cast<long>(digit_sum(std::uint64_t(k), p)) -
                          static_cast<long>(digit_sum(std::uint64_t(n), p))) /
                         static_cast<long>(p - 1);
      REQUIRE(Valuation(bound) <= vals[i]);
    }
  }
}
