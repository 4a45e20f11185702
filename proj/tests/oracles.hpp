#pragma once

// Independent reference computations used only by the tests. None of them
// calls into the library's numerical kernels.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <vector>

#include "sidon/chaos.hpp"
#include "sidon/poly.hpp"

namespace oracle {

using Complex = std::complex<double>;

inline std::vector<std::vector<int>> all_words(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<std::size_t>(m), 1);
  if (m == 0) return {w};
  while (true) {
    out.push_back(w);
    int i = m - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == n) w[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return out;
}

inline std::vector<int> profile(const std::vector<int>& word, int n) {
  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  for (int letter : word) ++alpha[static_cast<std::size_t>(letter - 1)];
  return alpha;
}

/// Number of words per exponent profile, by brute enumeration of all n^m words.
inline std::map<std::vector<int>, std::uint64_t> word_counts(int n, int m) {
  std::map<std::vector<int>, std::uint64_t> out;
  for (const auto& w : all_words(n, m)) ++out[profile(w, n)];
  return out;
}

inline Complex naive_eval(const std::vector<std::pair<sidon::MultiIndex, Complex>>& terms,
                          const std::vector<Complex>& z) {
  Complex sum = 0.0;
  for (const auto& [alpha, c] : terms) {
    Complex t = c;
    for (int j = 0; j < alpha.size(); ++j) t *= std::pow(z[static_cast<std::size_t>(j)], alpha[j]);
    sum += t;
  }
  return sum;
}

inline Complex naive_eval(const sidon::GeneralPoly& p, const std::vector<Complex>& z) {
  return naive_eval(p.all_terms(), z);
}

/// B(points) = sum over all words beta of b_beta prod_i points[i][beta_i],
/// with b_beta = c_alpha / #words(alpha).
inline Complex brute_form(const sidon::HomPoly& p, const std::vector<std::vector<Complex>>& points) {
  const int n = p.num_vars();
  const int m = p.degree();
  const auto counts = word_counts(n, m);
  Complex sum = 0.0;
  for (const auto& w : all_words(n, m)) {
    const auto alpha = profile(w, n);
    const Complex c = p.coefficient(sidon::MultiIndex(alpha));
    if (c == Complex(0.0, 0.0)) continue;
    Complex t = c / static_cast<double>(counts.at(alpha));
    for (int i = 0; i < m; ++i) t *= points[static_cast<std::size_t>(i)][static_cast<std::size_t>(w[static_cast<std::size_t>(i)] - 1)];
    sum += t;
  }
  return sum;
}

/// E|X| by direct evaluation of X at every sign pattern.
inline double brute_chaos_mean(const sidon::ChaosVector& x) {
  const int n = x.num_vars();
  double total = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Complex v = 0.0;
    for (const auto& [tuple, c] : x.coeffs()) {
      double s = 1.0;
      for (int i : tuple) s *= (mask >> (i - 1)) & 1U ? -1.0 : 1.0;
      v += s * c;
    }
    total += std::abs(v);
  }
  return total / static_cast<double>(std::uint64_t{1} << n);
}

inline double torus_abs(const std::vector<std::pair<sidon::MultiIndex, Complex>>& terms,
                        const std::vector<double>& theta) {
  Complex sum = 0.0;
  for (const auto& [alpha, c] : terms) {
    double angle = 0.0;
    for (int j = 0; j < alpha.size(); ++j) angle += alpha[j] * theta[static_cast<std::size_t>(j)];
    sum += c * std::polar(1.0, angle);
  }
  return std::abs(sum);
}

/// Dense grid scan with `per_axis` points per variable, then a compass search
/// from the best few grid points. A lower bound for the sup norm, normally
/// within rounding of it.
inline double dense_scan_sup(const sidon::GeneralPoly& p, int per_axis, int polish = 6) {
  const auto terms = p.all_terms();
  const int n = p.num_vars();
  if (terms.empty()) return 0.0;
  std::vector<std::pair<double, std::vector<double>>> best;
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  const double h = 2.0 * std::numbers::pi / per_axis;
  double floor = -1.0;
  while (true) {
    std::vector<double> theta;
    for (int k : idx) theta.push_back(k * h);
    const double v = torus_abs(terms, theta);
    if (best.size() < static_cast<std::size_t>(4 * polish) || v > floor) best.emplace_back(v, theta);
    if (best.size() > static_cast<std::size_t>(4 * polish)) {
      std::partial_sort(best.begin(), best.begin() + polish, best.end(),
                        [](const auto& a, const auto& b) { return a.first > b.first; });
      best.resize(static_cast<std::size_t>(polish));
      floor = best.back().first;
    }
    int j = n - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] == per_axis - 1) idx[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
    ++idx[static_cast<std::size_t>(j)];
  }
  double sup = 0.0;
  for (auto [value, theta] : best) {
    double step = h;
    while (step > 1e-11) {
      bool moved = false;
      for (int j = 0; j < n; ++j) {
        for (double dir : {1.0, -1.0}) {
          auto trial = theta;
          trial[static_cast<std::size_t>(j)] += dir * step;
          const double v = torus_abs(terms, trial);
          if (v > value) {
            value = v;
            theta = trial;
            moved = true;
          }
        }
      }
      if (!moved) step *= 0.5;
    }
    sup = std::max(sup, value);
  }
  return sup;
}

/// Primes up to `limit` by trial division.
inline std::vector<int> slow_primes(int limit) {
  std::vector<int> out;
  for (int k = 2; k <= limit; ++k) {
    bool prime = true;
    for (int d = 2; d * d <= k; ++d) {
      if (k % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(k);
  }
  return out;
}

/// prod_{p <= limit} sinc(pi/p)^{-1} in long double; a lower bound for kappa.
inline long double kappa_partial(int limit) {
  long double prod = 1.0L;
  for (int p : slow_primes(limit)) {
    const long double x = std::numbers::pi_v<long double> / p;
    prod *= x / std::sin(x);
  }
  return prod;
}

/// Midpoint quadrature of the k-th moment of c exp(2 pi i sum t_j / p_j).
inline Complex moment_quadrature(int m, int k, int nodes = 1 << 16) {
  Complex value = 1.0;
  Complex first = 1.0;
  for (int p : slow_primes(m)) {
    Complex qk = 0.0;
    Complex q1 = 0.0;
    for (int i = 0; i < nodes; ++i) {
      const double t = (i + 0.5) / nodes;
      qk += std::polar(1.0, 2.0 * std::numbers::pi * k * t / p);
      q1 += std::polar(1.0, 2.0 * std::numbers::pi * t / p);
    }
    value *= qk / static_cast<double>(nodes);
    first *= q1 / static_cast<double>(nodes);
  }
  return value / std::pow(first, k);
}

}  // namespace oracle
