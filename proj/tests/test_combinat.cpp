#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sidon/combinat.hpp"
#include "sidon/error.hpp"

using namespace sidon;

TEST_CASE("enumeration examples") {
  const auto two = enum_multi_indices(2, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == MultiIndex{2, 0});
  CHECK(two[1] == MultiIndex{1, 1});
  CHECK(two[2] == MultiIndex{0, 2});
  CHECK(enum_multi_indices(3, 2).size() == 6);
  const auto one = enum_multi_indices(1, 5);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == MultiIndex{5});
  CHECK(enum_multi_indices(4, 0).size() == 1);
}

TEST_CASE("enumeration matches brute-force profiles") {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 0; m <= 5; ++m) {
      const auto list = enum_multi_indices(n, m);
      const auto counts = oracle::word_counts(n, m);
      CHECK(list.size() == counts.size());
      std::set<std::vector<int>> seen;
      for (const auto& alpha : list) {
        CHECK(alpha.degree() == m);
        CHECK(seen.insert(alpha.exponents()).second);
        CHECK(counts.count(alpha.exponents()) == 1);
      }
    }
  }
}

TEST_CASE("tetrahedral indices number C(n, m)") {
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= 6; ++m) {
      std::size_t tetra = 0;
      for (const auto& alpha : enum_multi_indices(n, m)) tetra += alpha.is_tetrahedral();
      CHECK(BigInt(tetra) == binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)));
    }
  }
}

TEST_CASE("enumeration capacity") {
  CHECK_THROWS_AS(enum_multi_indices(30, 10, 1000), CapacityError);
  CHECK_NOTHROW(enum_multi_indices(3, 3, 10));
}

TEST_CASE("word counts") {
  CHECK(word_count(MultiIndex{1, 1}) == 2);
  CHECK(word_count(MultiIndex{2, 0}) == 1);
  CHECK(word_count(MultiIndex{1, 1, 1}) == 6);
  for (int n = 1; n <= 6; ++n) {
    for (int m = 0; m <= 6; ++m) {
      const auto counts = oracle::word_counts(n, m);
      std::uint64_t total = 0;
      for (const auto& alpha : enum_multi_indices(n, m)) {
        const std::uint64_t c = word_count(alpha);
        CHECK(c == counts.at(alpha.exponents()));
        total += c;
      }
      std::uint64_t power = 1;
      for (int i = 0; i < m; ++i) power *= static_cast<std::uint64_t>(n);
      CHECK(total == power);
    }
  }
  CHECK(word_count(MultiIndex{10, 10}) == 184756);
  CHECK_THROWS_AS(word_count(MultiIndex(std::vector<int>(30, 1))), OverflowError);
}

TEST_CASE("index words") {
  const IndexWord w({2, 1, 2});
  CHECK(w.canonical() == IndexWord({1, 2, 2}));
  CHECK_FALSE(w.is_tetrahedral());
  CHECK(IndexWord({3, 1}).is_tetrahedral());
  CHECK(w.profile(3) == MultiIndex{1, 2, 0});
  CHECK_THROWS_AS(w.profile(1), DimensionError);
}

TEST_CASE("multi-index validation") {
  CHECK_THROWS(MultiIndex{1, -1});
  CHECK(MultiIndex{3, 0, 2}.max_exponent() == 3);
}

TEST_CASE("prime counting") {
  CHECK(prime_count(10) == 4);
  CHECK(prime_count(2) == 1);
  CHECK(prime_count(1) == 0);
  CHECK(primes_upto(0.5).empty());
  const auto fast = primes_upto(5000);
  const auto slow = oracle::slow_primes(5000);
  REQUIRE(fast.size() == slow.size());
  for (std::size_t i = 0; i < fast.size(); ++i) CHECK(static_cast<int>(fast[i]) == slow[i]);
}

TEST_CASE("directed big-integer conversion") {
  for (std::uint64_t k : {20u, 25u, 30u, 60u}) {
    const BigInt f = factorial(k);
    const double up = to_double_up(f);
    const double down = to_double_down(f);
    CHECK(BigInt(up) >= f);
    CHECK(BigInt(down) <= f);
    CHECK(std::nextafter(down, INFINITY) >= up);
  }
  CHECK(to_double_up(BigInt(12345)) == 12345.0);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
}
