#include <doctest.h>

#include <omp.h>

#include "oracles.hpp"
#include "sidon/error.hpp"
#include "sidon/kernel.hpp"
#include "sidon/random_poly.hpp"
#include "sidon/torus.hpp"

using namespace sidon;

TEST_CASE("kappa enclosures") {
  const Enclosure coarse = kappa(1e-3);
  CHECK(coarse.width() <= 1e-3);
  CHECK(coarse.hi >= 2.209);
  CHECK(coarse.lo < 2.210);
  const Enclosure fine = kappa(1e-6);
  CHECK(fine.width() <= 1e-6);
  CHECK(fine.lo >= coarse.lo);
  CHECK(fine.hi <= coarse.hi);
  CHECK(coarse.contains(fine.mid()));
  CHECK(fine.hi >= 2.209);
  CHECK(fine.lo < 2.210);
  CHECK_THROWS_AS(kappa(1e-12), BudgetError);
}

TEST_CASE("kappa partial products match a long-double oracle") {
  for (int limit : {10, 1000, 20000}) {
    const LogKappaPartial part = log_kappa_partial(limit);
    const long double prod = oracle::kappa_partial(limit);
    CHECK(std::abs(std::exp(part.sum) - static_cast<double>(prod)) <= 1e-13 * static_cast<double>(prod));
    CHECK(part.primes == oracle::slow_primes(limit).size());
  }
  // The enclosure's lower end is the partial product up to some P, so it
  // must dominate the oracle's product over a shorter range.
  CHECK(kappa(1e-3).lo >= static_cast<double>(oracle::kappa_partial(1000)) * (1 - 1e-14));
}

TEST_CASE("moment examples") {
  CHECK(moment(3, 1) == Complex(1.0, 0.0));
  CHECK(moment(3, 2) == Complex(0.0, 0.0));
  const Complex m45 = moment(4, 5);
  CHECK(std::abs(m45) >= 1e-3);
  CHECK(std::abs(m45 - oracle::moment_quadrature(4, 5)) <= 1e-6);
}

TEST_CASE("moments are exact in closed form") {
  for (int m = 1; m <= 30; ++m) {
    CHECK(moment(m, 1) == Complex(1.0, 0.0));
    for (int k = 2; k <= m; ++k) CHECK(moment(m, k) == Complex(0.0, 0.0));
  }
}

TEST_CASE("moments match quadrature") {
  for (int m : {2, 3, 5, 7}) {
    for (int k = 1; k <= 12; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      CHECK(std::abs(moment(m, k) - oracle::moment_quadrature(m, k)) <= 1e-6);
    }
  }
}

TEST_CASE("kernel normalizers grow and stay below kappa") {
  const double kappa_hi = kappa(1e-6).hi;
  double previous = 0.0;
  for (int m = 1; m <= 10000; m += (m < 100 ? 1 : 97)) {
    const double c = std::abs(make_kernel(m).c);
    CHECK(c >= previous * (1 - 1e-15));
    CHECK(c <= kappa_hi);
    previous = c;
  }
}

TEST_CASE("kernel evaluation") {
  const KernelSpec spec = make_kernel(5);
  CHECK(spec.primes == std::vector<std::uint32_t>{2, 3, 5});
  const std::vector<double> zero = {0.0, 0.0, 0.0};
  CHECK(std::abs(r_eval(spec, zero) - spec.c) <= 1e-15);
  const std::vector<double> wrong = {0.0};
  CHECK_THROWS_AS(r_eval(spec, wrong), DimensionError);
  CHECK_THROWS(make_kernel(0));
}

TEST_CASE("Monte Carlo projection examples") {
  const HomPoly square = HomPoly::from_terms(1, 2, {{{2}, 1.0}});
  const std::vector<Complex> one = {1.0};
  const auto a = project_tetra_mc(square, one, 20000, 1);
  CHECK(std::abs(a.estimate) <= 4 * a.stderr_);

  const HomPoly prod = HomPoly::from_terms(2, 2, {{{1, 1}, 1.0}});
  const std::vector<Complex> ones = {1.0, 1.0};
  const auto b = project_tetra_mc(prod, ones, 20000, 2);
  CHECK(std::abs(b.estimate - 1.0) <= 4 * b.stderr_ + 1e-12);
  CHECK_THROWS(project_tetra_mc(prod, ones, 10, 2));
}

TEST_CASE("Monte Carlo projection is thread-count independent") {
  CounterRng rng(41);
  const HomPoly p = random_hom_poly(3, 3, rng);
  const auto z = random_polydisc_point(3, rng);
  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = project_tetra_mc(p, z, 5000, 9);
  omp_set_num_threads(4);
  const auto four = project_tetra_mc(p, z, 5000, 9);
  omp_set_num_threads(threads);
  CHECK(one.estimate == four.estimate);
  CHECK(one.stderr_ == four.stderr_);
  // The serial reference merges the same samples in a different order.
  const auto ser = project_tetra_mc_serial(p, z, 5000, 9);
  CHECK(std::abs(four.estimate - ser.estimate) <= 1e-12 * std::max(1.0, std::abs(ser.estimate)));
  CHECK(std::abs(four.stderr_ - ser.stderr_) <= 1e-12 * ser.stderr_);
}

TEST_CASE("Monte Carlo standard error scales like samples^-1/2") {
  CounterRng rng(42);
  double ratio_sum = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const HomPoly p = random_hom_poly(3, 3, rng);
    const auto z = random_polydisc_point(3, rng);
    const auto small = project_tetra_mc(p, z, 10000, derive_seed(5, static_cast<std::uint64_t>(trial)));
    const auto large = project_tetra_mc(p, z, 40000, derive_seed(6, static_cast<std::uint64_t>(trial)));
    ratio_sum += large.stderr_ / small.stderr_;
  }
  const double mean = ratio_sum / 20;
  CHECK(mean >= 0.4);
  CHECK(mean <= 0.6);
}

TEST_CASE("tetrahedral part obeys the kappa^m inflation bound") {
  CounterRng rng(43);
  const double kappa_hi = kappa(1e-6).hi;
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const int m = 1 + static_cast<int>(rng.below(4));
    const HomPoly p = random_hom_poly(n, m, rng, 12);
    const HomPoly t = tetra_split(p).tetrahedral;
    const double t_lo = sup_norm(t, {.rel_err = 1e-4}).enclosure.lo;
    const double p_hi = sup_norm(p, {.rel_err = 1e-4}).enclosure.hi;
    CHECK(t_lo <= std::pow(kappa_hi, m) * p_hi * (1 + 1e-9));
  }
}
