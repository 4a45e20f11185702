#include "sidon/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "sidon/bohr.hpp"
#include "sidon/chaos.hpp"
#include "sidon/combinat.hpp"
#include "sidon/error.hpp"
#include "sidon/kernel.hpp"
#include "sidon/polarize.hpp"
#include "sidon/random_poly.hpp"
#include "sidon/report.hpp"
#include "sidon/sidon_bounds.hpp"
#include "sidon/torus.hpp"

namespace sidon {

namespace {

using Suite = std::vector<CheckResult>;

struct Recorder {
  std::string suite;
  Suite& out;

  void operator()(const std::string& check, bool passed, const std::string& detail = {}) {
    out.push_back({suite, check, passed, detail});
  }
};

CounterRng stream(std::uint64_t seed, std::uint64_t salt) { return CounterRng(derive_seed(seed, salt)); }

double rel_diff(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

void combinat_suite(std::uint64_t, Recorder check) {
  bool counts = true;
  bool ordered = true;
  for (int n = 1; n <= 5; ++n) {
    for (int m = 0; m <= 5; ++m) {
      const auto all = enum_multi_indices(n, m);
      counts = counts && BigInt(all.size()) == binomial(static_cast<std::uint64_t>(n + m - 1), static_cast<std::uint64_t>(m));
      ordered = ordered && std::is_sorted(all.begin(), all.end(), MonomialOrder{});
    }
  }
  check("enumeration count equals C(n+m-1, m)", counts);
  check("enumeration follows the monomial order", ordered);

  bool words = true;
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 5; ++m) {
      std::uint64_t total = 0;
      for (const auto& alpha : enum_multi_indices(n, m)) total += word_count(alpha);
      words = words && total == static_cast<std::uint64_t>(std::pow(n, m));
    }
  }
  check("word counts sum to n^m", words);

  const BigInt big = factorial(30);
  check("directed conversion brackets 30!", to_double_down(big) <= to_double_up(big) &&
                                                BigInt(to_double_down(big)) <= big && BigInt(to_double_up(big)) >= big);
  check("prime count pi(10^6) = 78498", prime_count(1e6) == 78498);
}

void polar_suite(std::uint64_t seed, Recorder check) {
  auto rng = stream(seed, 1);
  double diag = 0.0;
  double sym = 0.0;
  double coeff = 0.0;
  double l1 = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const int m = 1 + static_cast<int>(rng.below(4));
    const HomPoly p = random_hom_poly(n, m, rng);
    const auto z = random_polydisc_point(n, rng);
    std::vector<std::vector<Complex>> same(static_cast<std::size_t>(m), z);
    diag = std::max(diag, rel_diff(polarize_eval(p, same), evaluate(p, z)));

    std::vector<std::vector<Complex>> pts;
    for (int i = 0; i < m; ++i) pts.push_back(random_polydisc_point(n, rng));
    auto swapped = pts;
    std::reverse(swapped.begin(), swapped.end());
    sym = std::max(sym, rel_diff(polarize_eval(p, swapped), polarize_eval(p, pts)));

    std::vector<int> letters;
    for (int i = 0; i < m; ++i) letters.push_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    std::vector<std::vector<Complex>> basis;
    for (int letter : letters) {
      std::vector<Complex> e(static_cast<std::size_t>(n), Complex(0.0, 0.0));
      e[static_cast<std::size_t>(letter - 1)] = 1.0;
      basis.push_back(e);
    }
    coeff = std::max(coeff, rel_diff(polarize_eval(p, basis), form_coefficient(p, IndexWord(letters))));
    l1 = std::max(l1, std::abs(form_l1_norm(p) - l1_coeff_norm(p)) / std::max(1.0, l1_coeff_norm(p)));
  }
  check("diagonal restriction B(z,...,z) = P(z)", diag <= 1e-12, format_number(diag));
  check("symmetry under argument permutation", sym <= 1e-12, format_number(sym));
  check("form coefficients at basis tuples", coeff <= 1e-12, format_number(coeff));
  check("form l1 norm equals coefficient l1 norm", l1 <= 1e-12, format_number(l1));

  int violations = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(2));
    const int m = 2 + static_cast<int>(rng.below(3));
    const HomPoly p = random_hom_poly(n, m, rng);
    const std::vector<int> parts = {1, m - 1};
    std::vector<std::vector<Complex>> pts = {random_polydisc_point(n, rng), random_polydisc_point(n, rng)};
    const Complex b = polarize_eval(p, repeat_points(pts, parts));
    SupNormOptions opts;
    opts.rel_err = 1e-4;
    if (std::abs(b) > harris_constant(m, parts) * sup_norm(p, opts).enclosure.hi) ++violations;
  }
  check("Harris inequality", violations == 0, std::to_string(violations) + " violations");
  check("Harris constant for (1,1) is 2", harris_constant(2, std::vector<int>{1, 1}) == 2.0);
}

void kernel_suite(std::uint64_t seed, Recorder check) {
  bool exact = true;
  for (int m = 1; m <= 30; ++m) {
    exact = exact && moment(m, 1) == Complex(1.0, 0.0);
    for (int k = 2; k <= m; ++k) exact = exact && moment(m, k) == Complex(0.0, 0.0);
  }
  check("moment(m,1) = 1 and moment(m,k) = 0 for 2 <= k <= m", exact);
  const Enclosure k = kappa(1e-3);
  // The quoted value 2.209... is a truncated decimal: kappa lies in [2.209, 2.210).
  check("kappa enclosure of width <= 1e-3 meets [2.209, 2.210)", k.hi >= 2.209 && k.lo < 2.210 && k.width() <= 1e-3,
        format_number(k.lo) + ".." + format_number(k.hi));

  auto rng = stream(seed, 2);
  int outside = 0;
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const int m = 1 + static_cast<int>(rng.below(3));
    const HomPoly p = random_hom_poly(n, m, rng);
    const auto z = random_polydisc_point(n, rng);
    const auto est = project_tetra_mc(p, z, 20000, derive_seed(seed, 100 + static_cast<std::uint64_t>(trial)));
    const Complex exact_value = evaluate(tetra_split(p).tetrahedral, z);
    if (std::abs(est.estimate - exact_value) > 5.0 * est.stderr_ + 1e-12) ++outside;
  }
  check("Monte Carlo projection within 5 standard errors", outside == 0, std::to_string(outside) + " outside");
}

void chaos_suite(std::uint64_t seed, Recorder check) {
  auto rng = stream(seed, 3);
  int violations = 0;
  double agree = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 1 + static_cast<int>(rng.below(4));
    const int n = m + static_cast<int>(rng.below(static_cast<std::uint64_t>(13 - m)));
    const ChaosVector x = random_chaos(n, m, rng, 16);
    const HyperCheck h = hyper_check(x);
    if (!(h.holds && h.ratio >= 1.0 - 1e-12)) ++violations;
    agree = std::max(agree, std::abs(chaos_abs_mean(x) - chaos_abs_mean_serial(x)) / chaos_l2(x));
  }
  check("1 <= ratio <= e^m", violations == 0, std::to_string(violations) + " violations");
  check("Gray-code and direct enumeration agree", agree <= 1e-12, format_number(agree));
}

void sidon_suite(std::uint64_t seed, Recorder check) {
  bool linear = true;
  for (std::int64_t n = 2; n <= 1000; n *= 3) linear = linear && upper_best(1, n) == 1.0;
  check("upper_best(1, n) = 1", linear);
  check("upper_best(2, 2) = sqrt 3", std::abs(upper_best(2, 2) - std::sqrt(3.0)) <= 1e-15);

  bool found = false;
  for (std::int64_t n = 5; n <= 100000000 && !found; n *= 2) {
    const auto main = upper_main(2, n);
    found = main && *main < upper_trivial(2, n);
  }
  check("main bound beats trivial bound for m = 2 somewhere", found);

  LowerSearchOptions opts;
  opts.seed = seed;
  opts.candidates = 6;
  opts.relax_rounds = 1;
  bool sandwich = true;
  for (int m = 2; m <= 3; ++m) {
    const auto found_lower = lower_search(m, 3, opts);
    sandwich = sandwich && found_lower.certified_ratio >= 1.0 - 1e-12 && found_lower.certified_ratio <= upper_best(m, 3);
  }
  check("1 <= certified lower <= upper_best", sandwich);
}

void bohr_suite(std::uint64_t seed, Recorder check) {
  bool below = true;
  bool bracketed = true;
  const double tol = 1e-8;
  for (std::int64_t n : {2, 100, 1000, 10000}) {
    const BohrReport r = bohr_lower(n, tol);
    below = below && r.r_lower <= r.r_upper && r.tail_bound <= 1e-9;
    bracketed = bracketed && bohr_series(n, r.r_lower).value <= 0.5 &&
                bohr_series(n, r.r_lower * (1.0 + 10.0 * tol)).value > 0.5;
  }
  check("r_lower <= 2 sqrt(log n / n)", below);
  check("F(r_lower) <= 1/2 < F(r_lower (1 + 10 tol))", bracketed);

  auto rng = stream(seed, 4);
  double worst = 0.0;
  bool monotone = true;
  for (int trial = 0; trial < 200; ++trial) {
    GeneralPoly q = random_general_poly(1, 1 + static_cast<int>(rng.below(6)), rng);
    SupNormOptions opts;
    opts.rel_err = 1e-6;
    q = q.scaled(1.0 / sup_norm(q, opts).enclosure.hi);
    worst = std::max(worst, bohr_majorant(q, 1.0 / 3.0));
    monotone = monotone && bohr_majorant(q, 0.2) <= bohr_majorant(q, 0.3);
  }
  check("majorant nondecreasing in r", monotone);
  check("majorant at 1/3 is <= 1 for normalized Q", worst <= 1.0 + 1e-9, format_number(worst));
  check("Mobius witness exceeds 1.001 at r = 0.35", bohr_majorant(mobius_poly(0.95, 200), 0.35) > 1.001);

  bool calculus = true;
  for (std::int64_t n = 2; n <= 1000000; n *= 10) {
    for (int m = 1; m <= 60; ++m) calculus = calculus && calculus_inequality_check(n, m);
  }
  check("(log n)^m <= n m!", calculus);
}

const std::vector<std::pair<std::string, std::function<void(std::uint64_t, Recorder)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<void(std::uint64_t, Recorder)>>> suites = {
      {"combinat", combinat_suite}, {"polar", polar_suite}, {"kernel", kernel_suite},
      {"chaos", chaos_suite},       {"sidon", sidon_suite}, {"bohr", bohr_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
  std::vector<CheckResult> out;
  bool matched = false;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    matched = true;
    Recorder rec{name, out};
    try {
      fn(seed, rec);
    } catch (const std::exception& e) {
      rec("suite completed", false, e.what());
    }
  }
  if (!matched) throw Error("unknown suite '" + suite + "'");
  return out;
}

}  // namespace sidon
