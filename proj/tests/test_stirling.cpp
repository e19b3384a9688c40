#include <doctest.h>

#include "gfrac/stirling.hpp"
#include "support/oracles.hpp"

using namespace gfrac;

TEST_CASE("S(0,0) = 1 and S(n,0) = 0") {
  const auto t = stirling_table(1, 1, 5);
  CHECK(t(0, 0) == 1);
  for (unsigned n = 1; n <= 5; ++n) CHECK(t(n, 0) == 0);
  CHECK(t.row(0) == std::vector<BigInt>{1});
}

TEST_CASE("r = m = 1 gives Stirling numbers of the second kind") {
  const auto t = stirling_table(1, 1, 12);
  CHECK(t(3, 1) == 1);
  CHECK(t(3, 2) == 3);
  CHECK(t(3, 3) == 1);
  const auto classic = oracle::stirling2(12);
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n + 2; ++k) {
      const BigInt want = k <= n ? classic[n][k] : BigInt(0);
      CHECK(t(n, k) == want);
    }
  CHECK(t(12, 6) == BigInt(1323652));
}

TEST_CASE("table matches the symbolic expansion for r, m <= 3, n <= 6") {
  for (unsigned r = 1; r <= 3; ++r)
    for (unsigned m = 1; m <= 3; ++m) {
      const auto t = stirling_table(r, m, 6);
      for (unsigned n = 0; n <= 6; ++n) {
        const auto expansion = stirling_oracle(r, m, n);
        // expansion keyed by derivative order; k = 1 is the lowest order
        std::vector<BigInt> got = t.row(n);
        std::vector<BigInt> want;
        for (const auto& [order, c] : expansion) want.push_back(c);
        CAPTURE(r);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(got == want);
      }
    }
}

TEST_CASE("oracle examples") {
  CHECK(stirling_oracle(1, 1, 0) == std::map<unsigned, BigInt>{{0, 1}});
  CHECK(stirling_oracle(1, 1, 2) == std::map<unsigned, BigInt>{{1, 1}, {2, 1}});
  CHECK(stirling_oracle(1, 1, 3) == std::map<unsigned, BigInt>{{1, 1}, {2, 3}, {3, 1}});
  // (x^2 D)^2 = x^2 (2x D + x^2 D^2)
  CHECK(stirling_oracle(2, 1, 2) == std::map<unsigned, BigInt>{{1, 2}, {2, 1}});
  CHECK_THROWS_AS(stirling_oracle(5, 1, 2), std::length_error);
  CHECK_THROWS_AS(stirling_oracle(1, 1, 9), std::length_error);
}

TEST_CASE("support and nonnegativity") {
  for (unsigned r = 1; r <= 4; ++r)
    for (unsigned m = 1; m <= 4; ++m) {
      const auto t = stirling_table(r, m, 7);
      for (unsigned n = 1; n <= 7; ++n) {
        const unsigned top = 1 + std::min(r, m) * (n - 1);
        CHECK(t.support(n) == top);
        CHECK(t(n, top) > 0);
        CHECK(t(n, top + 1) == 0);
        CHECK(t(n, 0) == 0);
        for (unsigned k = 1; k <= top; ++k) CHECK(t(n, k) >= 0);
      }
    }
}

TEST_CASE("table is symmetric in r and m") {
  for (unsigned r = 1; r <= 4; ++r)
    for (unsigned m = 1; m <= 4; ++m) {
      const auto a = stirling_table(r, m, 7);
      const auto b = stirling_table(m, r, 7);
      for (unsigned n = 0; n <= 7; ++n) CHECK(a.row(n) == b.row(n));
    }
}

TEST_CASE("large rows stay exact") {
  const auto t = stirling_table(3, 2, 30);
  BigInt sum = 0;
  for (const auto& v : t.row(30)) sum += v;
  CHECK(sum > BigInt(std::numeric_limits<unsigned long long>::max()));
  CHECK_THROWS_AS(stirling_table(0, 1, 3), std::domain_error);
}
