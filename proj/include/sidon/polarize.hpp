#pragma once

// The symmetric m-linear form B with B(z, ..., z) = P(z). B is never stored
// as an n^m tensor: coefficients come from b_beta = c_alpha / h(beta) and
// values from the polarization formula.

#include <span>
#include <vector>

#include "sidon/combinat.hpp"
#include "sidon/poly.hpp"

namespace sidon {

inline constexpr int kMaxPolarizationDegree = 24;

/// Read-only view of the symmetric form attached to a homogeneous polynomial.
class SymForm {
 public:
  explicit SymForm(HomPoly source) : source_(std::move(source)) {}

  const HomPoly& source() const { return source_; }
  int arity() const { return source_.degree(); }
  Complex coefficient(const IndexWord& beta) const;
  Complex operator()(std::span<const std::vector<Complex>> points) const;

 private:
  HomPoly source_;
};

/// B(z^(1), ..., z^(m)) = 1/(2^m m!) sum_eps eps_1...eps_m P(sum_i eps_i z^(i)).
/// Exact 2^m-term sum reduced pairwise over fixed blocks, so the result does
/// not depend on the thread count. Throws ArityError unless there are exactly
/// m points, BudgetError for m > 24.
Complex polarize_eval(const HomPoly& p, std::span<const std::vector<Complex>> points);
/// Single-threaded reference of the same sum (sequential order).
Complex polarize_eval_serial(const HomPoly& p, std::span<const std::vector<Complex>> points);

/// b_beta = c_alpha / h(beta), alpha the exponent profile of beta.
Complex form_coefficient(const HomPoly& p, const IndexWord& beta);

/// sum over all n^m words of |b_beta|, grouped by profile:
/// sum_alpha h(alpha) * (|c_alpha| / h(alpha)).
double form_l1_norm(const HomPoly& p);

/// (m_1! ... m_k! / (m_1^m_1 ... m_k^m_k)) * (m^m / m!). Throws
/// PartitionError unless the parts are positive and sum to m.
double harris_constant(int m, std::span<const int> parts);

/// The m points obtained by repeating points[i] parts[i] times.
std::vector<std::vector<Complex>> repeat_points(std::span<const std::vector<Complex>> points,
                                                std::span<const int> parts);

}  // namespace sidon
