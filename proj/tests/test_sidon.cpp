#include <doctest.h>

#include <cmath>

#include "sidon/error.hpp"
#include "sidon/random_poly.hpp"
#include "sidon/sidon_bounds.hpp"

using namespace sidon;

TEST_CASE("trivial bound examples") {
  CHECK(upper_trivial(2, 2) == std::nextafter(std::sqrt(3.0), 2.0));
  CHECK(upper_trivial(1, 7) >= std::sqrt(7.0));
  CHECK(upper_trivial(1, 7) <= std::nextafter(std::sqrt(7.0), 3.0));
  CHECK(upper_trivial(3, 3) >= std::sqrt(10.0));
  CHECK(upper_trivial(3, 3) <= std::nextafter(std::sqrt(10.0), 4.0));
  CHECK(upper_trivial(1, 4) == 2.0);
}

TEST_CASE("best bound examples") {
  CHECK(upper_best(1, 1000000) == 1.0);
  CHECK(upper_best(2, 2) == upper_trivial(2, 2));
  CHECK_FALSE(upper_main(2, 2).has_value());
  const auto main = upper_main(2, 1000000);
  REQUIRE(main.has_value());
  CHECK(*main < upper_trivial(2, 1000000));
  CHECK(upper_best(2, 1000000) == *main);
}

TEST_CASE("main bound applicability") {
  CHECK_FALSE(upper_main(3, 9).has_value());
  CHECK(upper_main(3, 10).has_value());
  CHECK_FALSE(upper_main(1, 10).has_value());
  const auto main = upper_main(3, 50);
  REQUIRE(main.has_value());
  CHECK(*main == doctest::Approx(remainder_bound(3, 50) + tetrahedral_bound(3, 50)));
}

TEST_CASE("main bound formula against direct arithmetic") {
  const double kappa_hi = 2.2092269069479937;
  for (auto [m, n] : {std::pair{2, 10}, std::pair{3, 100}, std::pair{4, 1000}}) {
    double fact = 1.0;
    for (int k = 2; k < m; ++k) fact *= k;
    double binom = 1.0;
    for (int k = 1; k <= m - 1; ++k) binom = binom * (n - m + k) / k;
    const double rem = std::sqrt(2 * m * std::exp(1.0) * std::pow(n, m - 1) / fact);
    const double tet = std::pow(std::exp(1.0) * kappa_hi, m) * std::sqrt(binom);
    CHECK(remainder_bound(m, n) == doctest::Approx(rem).epsilon(1e-12));
    CHECK(tetrahedral_bound(m, n) == doctest::Approx(tet).epsilon(1e-6));
    CHECK(remainder_bound(m, n) >= rem * (1 - 1e-14));
  }
}

TEST_CASE("upper_best is nondecreasing in n") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 2; n < 8; ++n) CHECK(upper_best(m, n) <= upper_best(m, n + 1));
  }
}

TEST_CASE("main-shape constant") {
  const double c = main_shape_constant();
  for (int m = 2; m <= 6; ++m) {
    for (std::int64_t n : {m * m + 1, 100, 10000, 1000000}) {
      if (n <= m * m) continue;
      CHECK(upper_best(m, n) <= main_shape_bound(m, n));
    }
  }
  CHECK(c > 2.0);
}

TEST_CASE("lower search examples") {
  LowerSearchOptions opts;
  opts.candidates = 6;
  const auto lin = lower_search(1, 3, opts);
  CHECK(lin.certified_ratio >= 1.0 - 1e-6);
  CHECK(lin.certified_ratio <= 1.0 + 1e-9);

  const auto quad = lower_search(2, 2, opts);
  CHECK(quad.certified_ratio >= 1.0 - 1e-9);
  CHECK(quad.certified_ratio <= std::sqrt(3.0) * (1 + 1e-9));
}

TEST_CASE("lower search is deterministic and thread-count independent") {
  LowerSearchOptions opts;
  opts.candidates = 8;
  opts.seed = 3;
  const auto a = lower_search(3, 3, opts);
  const auto b = lower_search(3, 3, opts);
  CHECK(a.certified_ratio == b.certified_ratio);
  CHECK(a.witness == b.witness);
}

TEST_CASE("certified ratio is scale invariant") {
  CounterRng rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    const HomPoly p = random_hom_poly(2, 3, rng);
    SupNormOptions opts;
    opts.rel_err = 1e-6;
    const double a = certified_ratio(p, opts);
    const double b = certified_ratio(p.scaled(Complex(0.0, 3.5)), opts);
    CHECK(std::abs(a - b) <= 1e-12 * a);
  }
  CHECK_THROWS_AS(certified_ratio(HomPoly(2, 2), SupNormOptions{}), DegenerateError);
}

TEST_CASE("reports") {
  const SidonBoundReport r = sidon_report(2, 2);
  CHECK(r.upper_best == upper_trivial(2, 2));
  CHECK_FALSE(r.main_applicable);
  CHECK(r.lower_certified == 1.0);
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.old_bound_shape == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS(sidon_report(0, 2));
}
