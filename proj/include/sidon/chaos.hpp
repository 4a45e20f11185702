#pragma once

// Homogeneous Rademacher chaos X = sum x_{i_1..i_m} eps_{i_1} ... eps_{i_m}
// over strictly increasing index tuples.

#include <cstdint>
#include <map>
#include <vector>

#include "sidon/poly.hpp"

namespace sidon {

inline constexpr int kMaxExactChaosVars = 24;

class ChaosVector {
 public:
  ChaosVector(int n, int m);

  int num_vars() const { return n_; }
  int order() const { return m_; }
  /// Sets x for a strictly increasing tuple of 1-based indices in 1..n;
  /// a zero coefficient removes the entry.
  void set(const std::vector<int>& tuple, Complex x);
  const std::map<std::vector<int>, Complex>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  ChaosVector scaled(Complex factor) const;
  /// X at one sign pattern; bit i-1 of `negative` set means eps_i = -1.
  Complex value(std::uint32_t negative) const;

 private:
  int n_;
  int m_;
  std::map<std::vector<int>, Complex> coeffs_;
};

/// (E|X|^2)^{1/2} = (sum |x|^2)^{1/2} by orthonormality of the eps-monomials.
double chaos_l2(const ChaosVector& x);

/// E|X| over all 2^n sign patterns, Gray-code order with incremental updates,
/// blocks split on the high sign bits and reduced pairwise. Throws
/// BudgetError for n > 24.
double chaos_abs_mean(const ChaosVector& x);
/// Direct evaluation at every pattern, sequentially.
double chaos_abs_mean_serial(const ChaosVector& x);

struct MonteCarloMode {
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
};

struct ChaosMean {
  double mean = 0.0;
  double stderr_ = 0.0;
};

/// Unbiased Monte Carlo estimate of E|X| with its standard error.
ChaosMean chaos_abs_mean(const ChaosVector& x, const MonteCarloMode& mode);

struct HyperCheck {
  double ratio = 0.0;  // (E|X|^2)^{1/2} / E|X|
  double bound = 0.0;  // e^m
  bool holds = false;
};

/// Exact-mode check of (E|X|^2)^{1/2} <= e^m E|X|. Throws DegenerateError for X = 0.
HyperCheck hyper_check(const ChaosVector& x);

}  // namespace sidon
