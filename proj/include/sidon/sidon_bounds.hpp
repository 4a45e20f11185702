#pragma once

// Upper bounds for the Sidon constant S(m, n) of m-homogeneous polynomials
// in n variables, and certified lower bounds from explicit witnesses.

#include <cstdint>
#include <optional>
#include <string>

#include "sidon/poly.hpp"
#include "sidon/torus.hpp"

namespace sidon {

/// Width of the kappa enclosure whose upper end enters the bounds.
inline constexpr double kBoundKappaTol = 1e-6;

/// sqrt(C(n+m-1, m)), exact binomial, rounded upward.
double upper_trivial(int m, std::int64_t n);

/// Remainder part sqrt(2 m e n^{m-1} / (m-1)!), rounded upward.
double remainder_bound(int m, std::int64_t n);
/// Tetrahedral part (e kappa)^m sqrt(C(n-1, m-1)), rounded upward.
double tetrahedral_bound(int m, std::int64_t n);

/// remainder_bound + tetrahedral_bound when n > m^2 > 1 (and m < n);
/// nullopt otherwise.
std::optional<double> upper_main(int m, std::int64_t n);

/// 1 for m = 1, else the smallest applicable bound.
double upper_best(int m, std::int64_t n);

/// Explicit constant C = e * kappa_hi + 2 for which
/// upper_best(m, n) <= C^m sqrt(n^{m-1} / (m-1)!) when n > m^2.
double main_shape_constant();
/// C^m sqrt(n^{m-1} / (m-1)!) for the constant above.
double main_shape_bound(int m, std::int64_t n);

struct LowerSearchOptions {
  int candidates = 48;
  std::uint64_t seed = 0;
  int relax_rounds = 3;
  int relax_phases = 32;
  /// Variables touched by a random support (keeps sup-norm grids small).
  int max_support_vars = 3;
  std::size_t max_sparse_terms = 64;
  double rel_err = 1e-4;
  std::size_t sup_budget = std::size_t{1} << 20;
};

struct LowerSearchResult {
  HomPoly witness;
  double certified_ratio = 0.0;  // l1 / certified sup upper bound
  double l1 = 0.0;
  Enclosure sup;
  int candidates_scored = 0;
};

/// |||P|||_1 / sup_norm(P).hi for one polynomial: a certified lower bound
/// for S(m, n). Throws DegenerateError for P = 0.
double certified_ratio(const HomPoly& p, const SupNormOptions& options, Enclosure* sup = nullptr);

/// Search for witnesses with large certified ratio: random unimodular
/// coefficients on full, tetrahedral and random sparse supports, then
/// coordinate-wise phase relaxation of the best one against its
/// near-maximizer set.
LowerSearchResult lower_search(int m, int n, const LowerSearchOptions& options = {});

struct SidonBoundReport {
  int m = 0;
  std::int64_t n = 0;
  double upper_trivial = 0.0;
  std::optional<double> upper_main;
  double upper_best = 0.0;
  bool trivial_applicable = true;
  bool main_applicable = false;
  std::string best_formula;
  /// Without a search this is 1, witnessed by the monomial z_1^m.
  double lower_certified = 1.0;
  std::optional<HomPoly> witness;
  /// n^{(m-1)/2}: the shape of the older bound C^m n^{(m-1)/2}, shown without its constant.
  double old_bound_shape = 0.0;
};

/// Report for (m, n). With `search`, the lower bound comes from lower_search;
/// otherwise from the monomial z_1^m (ratio exactly 1, witness omitted).
SidonBoundReport sidon_report(int m, std::int64_t n, const LowerSearchOptions* search = nullptr);

}  // namespace sidon
