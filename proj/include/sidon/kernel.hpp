#pragma once

// The prime-indexed kernel r_m(t) = c_m exp(2 pi i sum_k t_k / p_k) on
// [0,1]^{pi(m)}: its first moment is 1 and its k-th moments vanish for
// 2 <= k <= m, so averaging P(z_1 r(t^1), ..., z_n r(t^n)) over independent
// t^j keeps exactly the tetrahedral terms of P.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "sidon/poly.hpp"

namespace sidon {

inline constexpr double kKappaPrimeCap = 1e7;

struct KernelSpec {
  int m = 1;
  std::vector<std::uint32_t> primes;  // primes <= m, increasing
  Complex c{1.0, 0.0};
};

/// Kernel of degree m >= 1 (no primes and c = 1 when m = 1).
KernelSpec make_kernel(int m);

/// c_m exp(2 pi i sum_k t_k / p_k). Throws DimensionError if t has the wrong length.
Complex r_eval(const KernelSpec& spec, std::span<const double> t);

/// Closed form of the k-th moment of r_m over [0,1]^{pi(m)}. Exactly 1 for
/// k = 1 and exactly 0 whenever some p_j divides k (in particular for
/// 2 <= k <= m).
Complex moment(int m, int k);

/// Certified enclosure of kappa = (prod_p sinc(pi/p))^{-1} with width <= tol.
/// Finite product over p <= P plus the tail bound
///   0 <= -log sinc(pi/p) <= (pi^2/6) / (p^2 - 1),  sum_{p>P} 1/p^2 <= 1/P.
/// Throws BudgetError if P would exceed `prime_cap`. Results are memoized.
Enclosure kappa(double tol, double prime_cap = kKappaPrimeCap);

/// Sum over p <= limit of -log sinc(pi/p), with a bound on its rounding error.
struct LogKappaPartial {
  double sum = 0.0;
  double error = 0.0;
  std::size_t primes = 0;
};
LogKappaPartial log_kappa_partial(double limit);

struct MonteCarloEstimate {
  Complex estimate;
  double stderr_ = 0.0;
  std::size_t samples = 0;
};

/// Monte Carlo estimate of T(P)(z) = E_t P(z_1 r(t^1), ..., z_n r(t^n)).
/// Sample s uses a counter-based stream keyed by (seed, s); blocks of a fixed
/// size are reduced in order, so the result is thread-count independent.
MonteCarloEstimate project_tetra_mc(const HomPoly& p, std::span<const Complex> z, std::size_t samples,
                                    std::uint64_t seed);
/// Sequential reference over the same samples.
MonteCarloEstimate project_tetra_mc_serial(const HomPoly& p, std::span<const Complex> z,
                                           std::size_t samples, std::uint64_t seed);

}  // namespace sidon
