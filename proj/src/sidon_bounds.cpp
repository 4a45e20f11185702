#include "sidon/sidon_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <numbers>

#include <boost/multiprecision/cpp_int.hpp>

#include "sidon/combinat.hpp"
#include "sidon/error.hpp"
#include "sidon/kernel.hpp"
#include "sidon/rng.hpp"
#include "sidon/rounding.hpp"

namespace sidon {

namespace {

const double kEUp = next_up(std::numbers::e);

double rational_up(const BigInt& num, const BigInt& den) {
  return next_up(boost::multiprecision::cpp_rational(num, den).convert_to<double>());
}

void check_mn(int m, std::int64_t n) {
  if (m < 1 || n < 1) throw DimensionError("bounds need m >= 1 and n >= 1");
}

}  // namespace

double upper_trivial(int m, std::int64_t n) {
  check_mn(m, n);
  const BigInt count = binomial(static_cast<std::uint64_t>(n + m - 1), static_cast<std::uint64_t>(m));
  return sqrt_up(to_double_up(count));
}

double remainder_bound(int m, std::int64_t n) {
  check_mn(m, n);
  const BigInt num = BigInt(2 * m) * boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(m - 1));
  const BigInt den = factorial(static_cast<std::uint64_t>(m - 1));
  return sqrt_up(next_up(rational_up(num, den) * kEUp));
}

double tetrahedral_bound(int m, std::int64_t n) {
  check_mn(m, n);
  const double e_kappa = next_up(kEUp * kappa(kBoundKappaTol).hi);
  double power = 1.0;
  for (int i = 0; i < m; ++i) power = next_up(power * e_kappa);
  const double root = sqrt_up(to_double_up(binomial(static_cast<std::uint64_t>(n - 1),
                                                   static_cast<std::uint64_t>(m - 1))));
  return next_up(power * root);
}

std::optional<double> upper_main(int m, std::int64_t n) {
  check_mn(m, n);
  const std::int64_t m2 = static_cast<std::int64_t>(m) * m;
  if (!(n > m2 && m2 > 1 && m < n)) return std::nullopt;
  return next_up(remainder_bound(m, n) + tetrahedral_bound(m, n));
}

double upper_best(int m, std::int64_t n) {
  check_mn(m, n);
  if (m == 1) return 1.0;
  double best = upper_trivial(m, n);
  if (auto main = upper_main(m, n)) best = std::min(best, *main);
  return best;
}

double main_shape_constant() { return next_up(next_up(kEUp * kappa(kBoundKappaTol).hi) + 2.0); }

double main_shape_bound(int m, std::int64_t n) {
  check_mn(m, n);
  const double c = main_shape_constant();
  double power = 1.0;
  for (int i = 0; i < m; ++i) power = next_down(power * c);
  const BigInt num = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(m - 1));
  const BigInt den = factorial(static_cast<std::uint64_t>(m - 1));
  const double ratio = next_down(boost::multiprecision::cpp_rational(num, den).convert_to<double>());
  return next_down(power * sqrt_down(ratio));
}

double certified_ratio(const HomPoly& p, const SupNormOptions& options, Enclosure* sup) {
  if (p.is_zero()) throw DegenerateError("the zero polynomial has no Sidon ratio");
  const SupNormResult result = sup_norm(p, options);
  if (sup != nullptr) *sup = result.enclosure;
  return next_down(next_down(l1_coeff_norm(p), 2) / result.enclosure.hi);
}

namespace {

// Random subset of `count` variables out of n (0-based, increasing).
std::vector<int> pick_vars(int n, int count, CounterRng& rng) {
  std::vector<int> vars(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) vars[static_cast<std::size_t>(j)] = j;
  for (int i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(n - i));
    std::swap(vars[static_cast<std::size_t>(i)], vars[k]);
  }
  vars.resize(static_cast<std::size_t>(count));
  std::sort(vars.begin(), vars.end());
  return vars;
}

std::vector<MultiIndex> embed(const std::vector<MultiIndex>& local, const std::vector<int>& vars, int n) {
  std::vector<MultiIndex> out;
  for (const MultiIndex& a : local) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < vars.size(); ++k) e[static_cast<std::size_t>(vars[k])] = a[static_cast<int>(k)];
    out.emplace_back(std::move(e));
  }
  return out;
}

HomPoly random_candidate(int m, int n, int index, const LowerSearchOptions& options) {
  if (index == 0) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[0] = m;
    return HomPoly(n, m, TermMap{{MultiIndex(e), Complex(1.0, 0.0)}});
  }
  CounterRng rng(derive_seed(options.seed, static_cast<std::uint64_t>(index)));
  const int var_count = std::min(n, std::max(1, options.max_support_vars));
  const std::vector<int> vars = pick_vars(n, var_count, rng);
  std::vector<MultiIndex> support = embed(enum_multi_indices(var_count, m), vars, n);

  switch (index % 3) {
    case 1: {
      std::vector<MultiIndex> tetra;
      for (const auto& a : support) {
        if (a.is_tetrahedral()) tetra.push_back(a);
      }
      if (!tetra.empty()) support = std::move(tetra);
      break;
    }
    case 2: {
      const std::size_t cap = std::min(options.max_sparse_terms, support.size());
      const std::size_t size = cap <= 2 ? cap : 2 + rng.below(cap - 1);
      for (std::size_t i = 0; i < size; ++i) {
        const auto k = i + rng.below(support.size() - i);
        std::swap(support[i], support[k]);
      }
      support.resize(size);
      break;
    }
    default:
      break;
  }
  TermMap terms;
  for (const auto& a : support) terms.emplace(a, rng.unimodular());
  return HomPoly(n, m, terms);
}

SupNormOptions sup_options(const LowerSearchOptions& options, std::uint64_t salt) {
  SupNormOptions sup;
  sup.rel_err = options.rel_err;
  sup.budget = options.sup_budget;
  sup.fft_cap = options.sup_budget;
  sup.seed = derive_seed(options.seed, salt);
  return sup;
}

struct Scored {
  HomPoly poly;
  double ratio = 0.0;
  Enclosure sup;
  std::vector<TorusPoint> maximizers;
  std::string key;
};

Scored score(HomPoly p, const LowerSearchOptions& options, std::uint64_t salt) {
  Scored s{std::move(p), 0.0, {}, {}, {}};
  const SupNormResult result = sup_norm(s.poly, sup_options(options, salt));
  s.sup = result.enclosure;
  s.maximizers = result.local_maxima;
  s.maximizers.push_back(result.argmax);
  s.ratio = next_down(next_down(l1_coeff_norm(s.poly), 2) / result.enclosure.hi);
  s.key = write_poly(GeneralPoly(s.poly));
  return s;
}

bool better(const Scored& a, const Scored& b) {
  if (a.ratio != b.ratio) return a.ratio > b.ratio;
  return a.key < b.key;
}

// Re-chooses each coefficient's phase to lower max_s |P(z_s)| over the
// near-maximizer set, keeping every modulus.
HomPoly relax_phases(const HomPoly& p, const std::vector<TorusPoint>& points, int phases) {
  std::vector<std::vector<Complex>> z;
  std::vector<Complex> values;
  for (const auto& t : points) {
    z.push_back(t.point());
    values.push_back(evaluate(p, z.back()));
  }
  TermMap terms = p.terms();
  for (auto& [alpha, c] : terms) {
    std::vector<Complex> mono;
    for (const auto& zs : z) {
      Complex v(1.0, 0.0);
      for (int j = 0; j < alpha.size(); ++j) {
        for (int e = 0; e < alpha[j]; ++e) v *= zs[static_cast<std::size_t>(j)];
      }
      mono.push_back(v);
    }
    Complex best_c = c;
    double best_peak = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= phases; ++k) {
      const Complex trial = (k == phases) ? c : std::polar(std::abs(c), 2.0 * std::numbers::pi * k / phases);
      double peak = 0.0;
      for (std::size_t s = 0; s < z.size(); ++s) peak = std::max(peak, std::abs(values[s] + (trial - c) * mono[s]));
      if (peak < best_peak) {
        best_peak = peak;
        best_c = trial;
      }
    }
    for (std::size_t s = 0; s < z.size(); ++s) values[s] += (best_c - c) * mono[s];
    c = best_c;
  }
  return HomPoly(p.num_vars(), p.degree(), terms);
}

}  // namespace

LowerSearchResult lower_search(int m, int n, const LowerSearchOptions& options) {
  if (m < 1 || n < 1) throw DimensionError("lower_search needs m >= 1 and n >= 1");
  if (options.candidates < 1) throw BudgetError("lower_search needs a positive candidate budget");
  const int var_count = std::min(n, std::max(1, options.max_support_vars));
  // Throws CapacityError before any work if the support cannot be enumerated.
  enum_multi_indices(var_count, m);

  std::vector<std::optional<Scored>> scored(static_cast<std::size_t>(options.candidates));
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < options.candidates; ++i) {
    scored[static_cast<std::size_t>(i)] =
        score(random_candidate(m, n, i, options), options, static_cast<std::uint64_t>(i));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < scored.size(); ++i) {
    if (better(*scored[i], *scored[best])) best = i;
  }
  Scored champion = std::move(*scored[best]);
  if (!(champion.ratio > 0.0)) throw DegenerateError("every candidate had zero norm");

  for (int round = 0; round < options.relax_rounds; ++round) {
    HomPoly relaxed = relax_phases(champion.poly, champion.maximizers, options.relax_phases);
    if (relaxed == champion.poly) break;
    Scored next = score(std::move(relaxed), options,
                        0x5eed0000ULL + static_cast<std::uint64_t>(round));
    if (!(next.ratio > champion.ratio)) break;
    champion = std::move(next);
  }

  LowerSearchResult out{champion.poly, champion.ratio, l1_coeff_norm(champion.poly), champion.sup,
                        options.candidates};
  return out;
}

SidonBoundReport sidon_report(int m, std::int64_t n, const LowerSearchOptions* search) {
  check_mn(m, n);
  SidonBoundReport r{.m = m,
                     .n = n,
                     .upper_trivial = upper_trivial(m, n),
                     .upper_main = upper_main(m, n),
                     .upper_best = upper_best(m, n),
                     .trivial_applicable = true,
                     .main_applicable = false,
                     .best_formula = {},
                     .lower_certified = 1.0,
                     .witness = std::nullopt,
                     .old_bound_shape = std::pow(static_cast<double>(n), (m - 1) / 2.0)};
  r.main_applicable = r.upper_main.has_value();
  if (m == 1) {
    r.best_formula = "S(1,n) = 1";
  } else if (r.main_applicable && *r.upper_main < r.upper_trivial) {
    r.best_formula = "remainder + tetrahedral";
  } else {
    r.best_formula = "trivial";
  }
  if (search != nullptr) {
    if (n > 64) throw CapacityError("lower_search is limited to n <= 64");
    const LowerSearchResult found = lower_search(m, static_cast<int>(n), *search);
    r.lower_certified = found.certified_ratio;
    r.witness = found.witness;
  }
  return r;
}

}  // namespace sidon
