#include "sidon/random_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sidon/combinat.hpp"

namespace sidon {

namespace {

// Floyd's sampling of k distinct indices from [0, total), sorted.
std::vector<std::size_t> sample_indices(std::size_t total, std::size_t k, CounterRng& rng) {
  if (k >= total) {
    std::vector<std::size_t> all(total);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return all;
  }
  std::vector<std::size_t> chosen;
  for (std::size_t j = total - k; j < total; ++j) {
    const std::size_t t = rng.below(j + 1);
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
      chosen.push_back(t);
    } else {
      chosen.push_back(j);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

void increasing_tuples(int n, int m, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n; ++i) {
    cur.push_back(i);
    increasing_tuples(n, m, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

HomPoly random_hom_poly(int n, int m, CounterRng& rng, std::size_t max_terms) {
  const auto basis = enum_multi_indices(n, m);
  std::vector<std::pair<MultiIndex, Complex>> terms;
  for (std::size_t i : sample_indices(basis.size(), max_terms, rng)) {
    terms.emplace_back(basis[i], rng.complex_normal());
  }
  return HomPoly::from_terms(n, m, terms);
}

GeneralPoly random_general_poly(int n, int degree, CounterRng& rng, std::size_t max_terms) {
  GeneralPoly q(n);
  for (int m = 0; m <= degree; ++m) q.set_part(random_hom_poly(n, m, rng, max_terms));
  return q;
}

ChaosVector random_chaos(int n, int m, CounterRng& rng, std::size_t max_terms) {
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  increasing_tuples(n, m, 1, cur, tuples);
  ChaosVector x(n, m);
  for (std::size_t i : sample_indices(tuples.size(), max_terms, rng)) x.set(tuples[i], rng.complex_normal());
  return x;
}

std::vector<Complex> random_polydisc_point(int n, CounterRng& rng) {
  std::vector<Complex> z;
  for (int j = 0; j < n; ++j) z.push_back(std::sqrt(rng.uniform()) * rng.unimodular());
  return z;
}

}  // namespace sidon
