#include "sidon/chaos.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "sidon/error.hpp"
#include "sidon/rng.hpp"
#include "sidon/summation.hpp"

namespace sidon {

ChaosVector::ChaosVector(int n, int m) : n_(n), m_(m) {
  if (n < 1 || m < 1 || m > n) throw DimensionError("chaos needs 1 <= m <= n");
  if (n > 32) throw DimensionError("chaos supports at most 32 variables");
}

void ChaosVector::set(const std::vector<int>& tuple, Complex x) {
  if (static_cast<int>(tuple.size()) != m_) throw ArityError("tuple length differs from the order");
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] < 1 || tuple[i] > n_ || (i > 0 && tuple[i] <= tuple[i - 1])) {
      throw DimensionError("chaos tuples must be strictly increasing within 1..n");
    }
  }
  if (x == Complex(0.0, 0.0)) {
    coeffs_.erase(tuple);
  } else {
    coeffs_[tuple] = x;
  }
}

ChaosVector ChaosVector::scaled(Complex factor) const {
  ChaosVector out(n_, m_);
  for (const auto& [tuple, x] : coeffs_) out.set(tuple, x * factor);
  return out;
}

Complex ChaosVector::value(std::uint32_t negative) const {
  Complex sum(0.0, 0.0);
  for (const auto& [tuple, x] : coeffs_) {
    int flips = 0;
    for (int i : tuple) flips += (negative >> (i - 1)) & 1U;
    sum += (flips % 2 == 0) ? x : -x;
  }
  return sum;
}

double chaos_l2(const ChaosVector& x) {
  CompensatedSum sum;
  for (const auto& [tuple, c] : x.coeffs()) sum.add(std::norm(c));
  return std::sqrt(sum.value());
}

double chaos_abs_mean_serial(const ChaosVector& x) {
  const int n = x.num_vars();
  if (n > kMaxExactChaosVars) throw BudgetError("exact enumeration needs n <= 24");
  CompensatedSum sum;
  const std::uint64_t patterns = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < patterns; ++s) sum.add(std::abs(x.value(static_cast<std::uint32_t>(s))));
  return sum.value() / static_cast<double>(patterns);
}

double chaos_abs_mean(const ChaosVector& x) {
  const int n = x.num_vars();
  if (n > kMaxExactChaosVars) {
    throw BudgetError("exact enumeration of 2^" + std::to_string(n) + " sign patterns exceeds 2^" +
                      std::to_string(kMaxExactChaosVars));
  }
  std::vector<Complex> coeff;
  std::vector<std::uint32_t> support;
  for (const auto& [tuple, c] : x.coeffs()) {
    std::uint32_t mask = 0;
    for (int i : tuple) mask |= 1U << (i - 1);
    coeff.push_back(c);
    support.push_back(mask);
  }
  // terms touched by each sign
  std::vector<std::vector<std::size_t>> touching(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < support.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      if ((support[k] >> i) & 1U) touching[static_cast<std::size_t>(i)].push_back(k);
    }
  }

  const int low_bits = std::min(n, 14);
  const std::uint64_t blocks = std::uint64_t{1} << (n - low_bits);
  const std::uint64_t per_block = std::uint64_t{1} << low_bits;
  std::vector<double> partial(blocks, 0.0);

#pragma omp parallel
  {
    std::vector<Complex> term(coeff.size());
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
      const auto high = static_cast<std::uint32_t>(b) << low_bits;
      Complex total(0.0, 0.0);
      for (std::size_t k = 0; k < coeff.size(); ++k) {
        term[k] = (std::popcount(support[k] & high) % 2 == 0) ? coeff[k] : -coeff[k];
        total += term[k];
      }
      CompensatedSum sum;
      sum.add(std::abs(total));
      for (std::uint64_t step = 1; step < per_block; ++step) {
        const int flip = std::countr_zero(step);
        for (std::size_t k : touching[static_cast<std::size_t>(flip)]) {
          total -= 2.0 * term[k];
          term[k] = -term[k];
        }
        sum.add(std::abs(total));
      }
      partial[static_cast<std::size_t>(b)] = sum.value();
    }
  }
  return pairwise_sum(partial) / std::ldexp(1.0, n);
}

ChaosMean chaos_abs_mean(const ChaosVector& x, const MonteCarloMode& mode) {
  if (mode.samples < 2) throw Error("Monte Carlo mode needs at least 2 samples");
  constexpr std::size_t kBlock = 4096;
  const std::size_t blocks = (mode.samples + kBlock - 1) / kBlock;
  std::vector<double> sums(blocks, 0.0);
  std::vector<double> squares(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    const std::size_t first = static_cast<std::size_t>(b) * kBlock;
    const std::size_t last = std::min(mode.samples, first + kBlock);
    CompensatedSum s1;
    CompensatedSum s2;
    for (std::size_t s = first; s < last; ++s) {
      CounterRng rng(derive_seed(mode.seed, s));
      const auto pattern = static_cast<std::uint32_t>(rng());
      const double v = std::abs(x.value(pattern));
      s1.add(v);
      s2.add(v * v);
    }
    sums[static_cast<std::size_t>(b)] = s1.value();
    squares[static_cast<std::size_t>(b)] = s2.value();
  }
  const double count = static_cast<double>(mode.samples);
  const double mean = pairwise_sum(sums) / count;
  const double second = pairwise_sum(squares) / count;
  const double variance = std::max(0.0, (second - mean * mean) * count / (count - 1.0));
  return {mean, std::sqrt(variance / count)};
}

HyperCheck hyper_check(const ChaosVector& x) {
  if (x.is_zero()) throw DegenerateError("hypercontractivity ratio is undefined for X = 0");
  HyperCheck out;
  out.ratio = chaos_l2(x) / chaos_abs_mean(x);
  out.bound = std::exp(static_cast<double>(x.order()));
  out.holds = out.ratio <= out.bound;
  return out;
}

}  // namespace sidon
