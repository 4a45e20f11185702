#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sidon/combinat.hpp"

namespace sidon {

using Complex = std::complex<double>;
using TermMap = std::map<MultiIndex, Complex, MonomialOrder>;

/// Sparse m-homogeneous polynomial sum c_alpha z^alpha in n variables.
/// Zero coefficients are never stored.
class HomPoly {
 public:
  HomPoly(int n, int m);
  /// Validates every alpha (length n, degree m); drops exact zeros.
  HomPoly(int n, int m, const TermMap& terms);
  /// Like the map constructor, but repeated alphas are summed.
  static HomPoly from_terms(int n, int m, const std::vector<std::pair<MultiIndex, Complex>>& terms);

  int num_vars() const { return n_; }
  int degree() const { return m_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Complex coefficient(const MultiIndex& alpha) const;

  HomPoly scaled(Complex factor) const;

  bool operator==(const HomPoly&) const = default;

 private:
  int n_;
  int m_;
  TermMap terms_;
};

/// Finite sum of homogeneous parts of distinct degrees.
class GeneralPoly {
 public:
  explicit GeneralPoly(int n);
  GeneralPoly(const HomPoly& p);  // NOLINT(google-explicit-constructor)
  /// Terms of any degrees; repeated alphas are summed, zeros dropped.
  static GeneralPoly from_terms(int n, const std::vector<std::pair<MultiIndex, Complex>>& terms);

  int num_vars() const { return n_; }
  const std::map<int, HomPoly>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  /// Highest degree present; 0 for the zero polynomial.
  int degree() const;
  std::size_t size() const;
  /// Constant term c_0.
  Complex constant() const;

  /// Replaces (or removes, if zero) the part of p's degree.
  void set_part(const HomPoly& p);
  GeneralPoly scaled(Complex factor) const;

  /// All terms, ascending degree then MonomialOrder.
  std::vector<std::pair<MultiIndex, Complex>> all_terms() const;

  bool operator==(const GeneralPoly&) const = default;

 private:
  int n_;
  std::map<int, HomPoly> parts_;
};

/// Certified real interval [lo, hi].
struct Enclosure {
  double lo = 0.0;
  double hi = 0.0;
  std::string method;

  Enclosure() = default;
  Enclosure(double lo, double hi, std::string method);

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  /// (hi - lo) / lo, or 0 for the degenerate [0, 0].
  double relative_width() const;
};

/// Sum of |c_alpha|, compensated.
double l1_coeff_norm(const HomPoly& p);
double l1_coeff_norm(const GeneralPoly& p);

/// Direct sparse evaluation in MonomialOrder. Throws DimensionError on a
/// length mismatch.
Complex evaluate(const HomPoly& p, std::span<const Complex> z);
Complex evaluate(const GeneralPoly& p, std::span<const Complex> z);

struct TetraSplit {
  HomPoly tetrahedral;
  HomPoly remainder;
};

/// T(P) keeps the terms with max_j alpha_j <= 1; R(P) = P - T(P).
TetraSplit tetra_split(const HomPoly& p);

/// Homogeneous parts in increasing degree; empty for the zero polynomial.
std::vector<std::pair<int, HomPoly>> homogeneous_parts(const GeneralPoly& q);

/// JSON polynomial file format:
///   {"n": <int>=1>, "terms": [{"alpha": [...], "re": <num>, "im": <num>}, ...]}
GeneralPoly read_poly(std::string_view text);
/// As read_poly, additionally requiring one common degree.
HomPoly read_hom_poly(std::string_view text);
std::string write_poly(const GeneralPoly& q);

}  // namespace sidon
