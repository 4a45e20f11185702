#include <doctest.h>

#include <cmath>

#include "sidon/bohr.hpp"
#include "sidon/error.hpp"
#include "sidon/random_poly.hpp"
#include "sidon/sidon_bounds.hpp"

using namespace sidon;

TEST_CASE("majorant examples") {
  const auto q = GeneralPoly::from_terms(1, {{{0}, 1.0}, {{1}, 1.0}});
  CHECK(bohr_majorant(q, 1.0 / 3.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  const auto prod = GeneralPoly::from_terms(2, {{{1, 1}, 1.0}});
  CHECK(bohr_majorant(prod, 0.5) == 0.25);
  const double witness = bohr_majorant(mobius_poly(0.95, 200), 0.35);
  CHECK(witness == doctest::Approx(mobius_majorant(0.95, 0.35)).epsilon(1e-12));
  CHECK(witness > 1.001);
  CHECK(mobius_majorant(0.95, 0.35) == doctest::Approx(0.95 + (1 - 0.95 * 0.95) * 0.35 / (1 - 0.95 * 0.35)));
}

TEST_CASE("majorant is nondecreasing in r") {
  CounterRng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const GeneralPoly q = random_general_poly(2, 4, rng);
    double previous = 0.0;
    for (double r = 0.0; r <= 1.0; r += 0.05) {
      const double v = bohr_majorant(q, r);
      CHECK(v >= previous);
      previous = v;
    }
  }
}

TEST_CASE("Wiener margins") {
  const auto q = GeneralPoly::from_terms(1, {{{0}, 0.4}, {{1}, 0.6}});
  const auto margins = wiener_margin(q, {}, 1e-9);
  REQUIRE(margins.size() == 1);
  CHECK(margins[0].m == 1);
  CHECK(margins[0].margin >= -1e-9);
  CHECK(margins[0].margin == doctest::Approx((1 - 0.16) - 0.6).epsilon(1e-6));

  const auto big = GeneralPoly::from_terms(1, {{{0}, 1.0}, {{1}, 1.0}});
  CHECK_THROWS_AS(wiener_margin(big), NormalizationError);
}

TEST_CASE("Mobius family attains the Wiener margin") {
  for (double a : {0.3, 0.6, 0.9}) {
    const GeneralPoly f = mobius_poly(a, 200);
    const double slack = mobius_truncation_bound(a, 200, 1.0);
    const auto margins = wiener_margin(f, {.rel_err = 1e-9}, slack + 1e-6);
    REQUIRE(!margins.empty());
    CHECK(margins[0].m == 1);
    CHECK(std::abs(margins[0].margin) <= 1e-9 + slack);
  }
}

TEST_CASE("random normalized polynomials satisfy Wiener's lemma") {
  CounterRng rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(2));
    const GeneralPoly raw = random_general_poly(n, 1 + static_cast<int>(rng.below(6)), rng, 8);
    SupNormOptions opts;
    opts.rel_err = 1e-4;
    const GeneralPoly q = raw.scaled(1.0 / sup_norm(raw, opts).enclosure.hi);
    for (const auto& wm : wiener_margin(q, opts, 1e-12)) CHECK(wm.margin >= -1e-9);
  }
}

TEST_CASE("degree bound examples") {
  for (std::int64_t n : {2, 10, 1000000}) CHECK(degree_bound(1, n) == 1.0);
  CHECK(degree_bound(2, 2) == upper_trivial(2, 2));
  for (std::int64_t n : {100, 10000}) {
    for (int m = 2; m <= 60; ++m) {
      const double u = degree_bound(m, n);
      CHECK(u <= upper_trivial(m, n));
      CHECK(u <= large_degree_bound(m, n));
      if (m > std::log(static_cast<double>(n))) {
        CHECK(u == std::min(upper_trivial(m, n), large_degree_bound(m, n)));
      }
      CHECK(degree_bound(m, n, DegreeStrategy::RefinedSplit) >= u);
    }
  }
  CHECK_THROWS(degree_bound(2, 1));
}

TEST_CASE("series agrees with a direct sum of degree bounds") {
  for (std::int64_t n : {2, 50, 1000}) {
    const double r = 0.5 * std::sqrt(std::log(static_cast<double>(n)) / n) / 4.0;
    const SeriesValue s = bohr_series(n, r);
    double direct = 0.0;
    for (int m = 1; m <= s.terms; ++m) direct += std::pow(r, m) * degree_bound(m, n);
    CHECK(s.tail <= 1e-9);
    CHECK(s.value >= direct);
    CHECK(s.value <= direct * (1 + 1e-9) + s.tail + 1e-15);
  }
  CHECK(bohr_series(10, 0.0).value == 0.0);
  CHECK(std::isinf(bohr_series(10, 1.0).value));
}

TEST_CASE("bisection brackets the threshold") {
  const double tol = 1e-10;
  for (std::int64_t n : {2, 3, 100, 1000}) {
    const BohrReport r = bohr_lower(n, tol);
    CAPTURE(n);
    CHECK(r.r_lower > 0.0);
    CHECK(r.r_lower <= r.r_upper);
    CHECK(r.tail_bound <= 1e-9);
    CHECK(bohr_series(n, r.r_lower).value <= 0.5);
    CHECK(bohr_series(n, r.r_lower * (1 + 10 * tol)).value > 0.5);
    CHECK(r.b_estimate == doctest::Approx(r.r_lower * std::sqrt(n / std::log(static_cast<double>(n)))));
  }
  CHECK(bohr_lower(100).r_upper == doctest::Approx(0.42919320525786947));
  CHECK_THROWS(bohr_lower(1));
}

TEST_CASE("refined strategy never beats min selection") {
  for (std::int64_t n : {100, 10000, 1000000}) {
    CHECK(bohr_lower(n, 1e-8, DegreeStrategy::RefinedSplit).r_lower <= bohr_lower(n, 1e-8).r_lower);
  }
}

TEST_CASE("calculus inequality") {
  CHECK(calculus_inequality_check(10, 2));
  for (std::int64_t n : {1, 2, 3, 1000, 1000000}) CHECK(calculus_inequality_check(n, 1));
  int violations = 0;
  for (double e = 0.3; e <= 6.0; e += 0.1) {
    const auto n = static_cast<std::int64_t>(std::llround(std::pow(10.0, e)));
    for (int m = 1; m <= 60; ++m) violations += !calculus_inequality_check(n, m);
  }
  CHECK(violations == 0);
}

TEST_CASE("Mobius truncation") {
  const GeneralPoly f = mobius_poly(0.5, 10);
  CHECK(f.degree() == 10);
  CHECK(f.constant() == Complex(0.5, 0.0));
  const std::vector<Complex> z = {Complex(0.3, 0.4)};
  const Complex exact = (0.5 - z[0]) / (1.0 - 0.5 * z[0]);
  CHECK(std::abs(evaluate(f, z) - exact) <= mobius_truncation_bound(0.5, 10, 0.5));
  CHECK_THROWS(mobius_poly(0.5, 0));
}
