#pragma once

// Grid evaluation kernels for trigonometric sums on the torus. Every kernel
// has a serial reference (`*_serial`) that the parallel and FFT variants are
// tested against; they compute identical grids up to floating rounding.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "sidon/poly.hpp"

namespace sidon {

/// f(theta) = sum_t c_t exp(i <k_t, theta>) with every k_t >= 0.
struct TrigPoly {
  int dims = 0;
  std::vector<int> exponents;  // terms x dims, row-major
  std::vector<Complex> coeffs;
  std::vector<int> spread;     // max exponent per dimension

  std::size_t terms() const { return coeffs.size(); }
  int exponent(std::size_t term, int dim) const {
    return exponents[term * static_cast<std::size_t>(dims) + static_cast<std::size_t>(dim)];
  }
  int total_spread() const;
  double l1() const;
  /// A bound on the rounding error of any kernel evaluating f at one point.
  double evaluation_error_bound(std::size_t grid_points = 1) const;
};

/// P restricted to the torus, exponents shifted so each variable's minimum
/// is 0 (this multiplies f by a unimodular factor and leaves |f| unchanged).
TrigPoly torus_restriction(const GeneralPoly& p);

/// Modulus-preserving reduction used by the sup-norm engine: variables that
/// appear with one exponent only are dropped, and when every term has the
/// same total degree one more variable is pinned to phase 0 (|f| is invariant
/// under the diagonal rotation theta -> theta + phi(1, ..., 1)).
struct ReducedTrig {
  TrigPoly poly;
  int full_dims = 0;
  std::vector<int> kept;  // reduced dimension -> original variable
  int pinned = -1;        // original variable pinned to 0, or -1

  /// Full torus point (length full_dims) for a reduced phase vector.
  std::vector<double> expand(std::span<const double> reduced) const;
};

ReducedTrig reduce_for_torus(const GeneralPoly& p);

/// Grid {anchor_j + 2 pi k_j / N}, flattened row-major (last dimension
/// fastest). N^dims values.
std::vector<Complex> grid_values_serial(const TrigPoly& f, int N, std::span<const double> anchor);
std::vector<Complex> grid_values_omp(const TrigPoly& f, int N, std::span<const double> anchor);
std::vector<Complex> grid_values_fft(const TrigPoly& f, int N, std::span<const double> anchor);

struct GridScan {
  double max_abs = 0.0;
  std::size_t argmax = 0;  // smallest flat index attaining max_abs
};

GridScan scan_max(std::span<const Complex> values);

/// Phase vector of flat grid index `flat`.
std::vector<double> grid_point(std::size_t flat, int dims, int N, std::span<const double> anchor);

/// N^dims, or SIZE_MAX on overflow.
std::size_t grid_size(int N, int dims);

/// f, grad |f|^2 and Hessian of |f|^2 at theta.
struct TrigJet {
  Complex value;
  double g = 0.0;
  std::vector<double> grad;
  std::vector<double> hess;  // dims x dims, row-major; filled only on request
};

TrigJet trig_jet(const TrigPoly& f, std::span<const double> theta, bool with_hessian);
Complex trig_value(const TrigPoly& f, std::span<const double> theta);

}  // namespace sidon
