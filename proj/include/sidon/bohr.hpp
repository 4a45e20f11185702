#pragma once

// Lower bounds for the n-dimensional Bohr radius K_n and the
// supporting checks (majorant series, Wiener's lemma, K_1 = 1/3).

#include <cstdint>
#include <vector>

#include "sidon/poly.hpp"
#include "sidon/torus.hpp"

namespace sidon {

/// sum_m r^m |||P_m|||_1: the sup over r D^n of sum |c_alpha z^alpha|.
double bohr_majorant(const GeneralPoly& q, double r);

struct WienerMargin {
  int m = 0;
  double margin = 0.0;  // (1 - |P_0|^2) - sup_norm(P_m).lo
};

/// Margins of Wiener's lemma for every homogeneous part of degree m > 0.
/// Requires sup_norm(q).hi <= 1 + hypothesis_slack, else NormalizationError.
std::vector<WienerMargin> wiener_margin(const GeneralPoly& q, const SupNormOptions& options = {},
                                        double hypothesis_slack = 0.0);

enum class DegreeStrategy {
  MinSelection,  // min of every valid bound, for all m
  RefinedSplit,  // main bound only for m < log n / (2 + 2 log kappa)
};

/// U(m, n): an upper bound for S(m, n) used degree by degree in the
/// majorant series. U(1, n) = 1.
double degree_bound(int m, std::int64_t n, DegreeStrategy strategy = DegreeStrategy::MinSelection);

/// (2e)^m max(1, n/m)^{m/2}, rounded upward (may be +inf).
double large_degree_bound(int m, std::int64_t n);

struct SeriesValue {
  double value = 0.0;  // partial sum plus tail bound, rounded upward
  int terms = 0;       // M
  double tail = 0.0;
};

/// F(r) = sum_{m>=1} r^m U(m, n), truncated at the first M whose certified
/// tail is <= tail_tol. +inf when the series cannot be bounded.
SeriesValue bohr_series(std::int64_t n, double r, DegreeStrategy strategy = DegreeStrategy::MinSelection,
                        double tail_tol = 1e-9);

struct BohrReport {
  std::int64_t n = 0;
  double r_lower = 0.0;
  double r_upper = 0.0;
  double b_estimate = 0.0;
  int terms_used = 0;
  double tail_bound = 0.0;
  double series_at_lower = 0.0;
  DegreeStrategy strategy = DegreeStrategy::MinSelection;
};

/// Largest r (to relative tolerance tol) with F(r) <= 1/2, found by
/// bisection on [0, 2 sqrt(log n / n)]. Any such r is a lower bound for K_n:
/// |c_0| + (1 - |c_0|^2)/2 <= 1.
BohrReport bohr_lower(std::int64_t n, double tol = 1e-10,
                      DegreeStrategy strategy = DegreeStrategy::MinSelection);

/// (log n)^m <= n m!, with (log n)^m rounded up and n m! rounded down.
bool calculus_inequality_check(std::int64_t n, int m);

/// Taylor polynomial of degree D of (a - z)/(1 - a z).
GeneralPoly mobius_poly(double a, int degree);
/// sup over |z| <= r of the dropped tail: (1 - a^2) a^D r^{D+1} / (1 - a r).
double mobius_truncation_bound(double a, int degree, double r);
/// Majorant of the full series at r: a + (1 - a^2) r / (1 - a r).
double mobius_majorant(double a, double r);

}  // namespace sidon
