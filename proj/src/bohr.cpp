#include "sidon/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/multiprecision/cpp_int.hpp>

#include "sidon/combinat.hpp"
#include "sidon/error.hpp"
#include "sidon/kernel.hpp"
#include "sidon/rounding.hpp"
#include "sidon/sidon_bounds.hpp"

namespace sidon {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLogSlack = 1e-12;

// Natural log of a positive big integer, to about 1e-15 relative.
double big_log(const BigInt& x) {
  const auto bits = boost::multiprecision::msb(x);
  if (bits < 62) return std::log(x.convert_to<double>());
  const auto shift = bits - 60;
  const double top = BigInt(x >> shift).convert_to<double>();
  return std::log(top) + static_cast<double>(shift) * std::numbers::ln2;
}

double up_log(double v) { return v + kLogSlack * (1.0 + std::abs(v)); }

double log_add(double a, double b) {
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

bool use_main(int m, std::int64_t n, DegreeStrategy strategy) {
  if (strategy == DegreeStrategy::MinSelection) return true;
  const double log_kappa = std::log(kappa(kBoundKappaTol).mid());
  return m < std::log(static_cast<double>(n)) / (2.0 + 2.0 * log_kappa);
}

double log_trivial(int m, std::int64_t n) {
  return 0.5 * big_log(binomial(static_cast<std::uint64_t>(n + m - 1), static_cast<std::uint64_t>(m)));
}

double log_large_degree(int m, std::int64_t n) {
  const double ratio = std::max(1.0, static_cast<double>(n) / m);
  return m * std::log(2.0 * std::numbers::e) + 0.5 * m * std::log(ratio);
}

// log U(m, n) rounded up; mirrors degree_bound without overflowing.
double log_degree_bound(int m, std::int64_t n, DegreeStrategy strategy) {
  if (m == 1) return 0.0;
  double best = std::min(log_trivial(m, n), log_large_degree(m, n));
  const std::int64_t m2 = static_cast<std::int64_t>(m) * m;
  if (n > m2 && m < n && use_main(m, n, strategy)) {
    const double log_remainder =
        0.5 * (std::log(2.0 * m * std::numbers::e) +
               big_log(boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(m - 1))) -
               big_log(factorial(static_cast<std::uint64_t>(m - 1))));
    const double log_tetra =
        m * std::log(std::numbers::e * kappa(kBoundKappaTol).hi) +
        0.5 * big_log(binomial(static_cast<std::uint64_t>(n - 1), static_cast<std::uint64_t>(m - 1)));
    best = std::min(best, log_add(log_remainder, log_tetra));
  }
  return up_log(best);
}

}  // namespace

double bohr_majorant(const GeneralPoly& q, double r) {
  if (r < 0.0) throw Error("radius must be non-negative");
  double total = 0.0;
  for (const auto& [m, part] : q.parts()) total += std::pow(r, m) * l1_coeff_norm(part);
  return total;
}

std::vector<WienerMargin> wiener_margin(const GeneralPoly& q, const SupNormOptions& options,
                                        double hypothesis_slack) {
  const double hi = sup_norm(q, options).enclosure.hi;
  if (hi > 1.0 + hypothesis_slack) {
    throw NormalizationError("sup norm upper bound " + std::to_string(hi) + " exceeds 1");
  }
  const double c0 = std::abs(q.constant());
  std::vector<WienerMargin> out;
  for (const auto& [m, part] : q.parts()) {
    if (m == 0) continue;
    out.push_back({m, (1.0 - c0 * c0) - sup_norm(part, options).enclosure.lo});
  }
  return out;
}

double large_degree_bound(int m, std::int64_t n) {
  if (m < 1 || n < 1) throw DimensionError("large_degree_bound needs m, n >= 1");
  return exp_up(up_log(log_large_degree(m, n)));
}

double degree_bound(int m, std::int64_t n, DegreeStrategy strategy) {
  if (m < 1 || n < 2) throw DimensionError("degree_bound needs m >= 1 and n >= 2");
  if (m == 1) return 1.0;
  double best = std::min(upper_trivial(m, n), large_degree_bound(m, n));
  if (use_main(m, n, strategy)) {
    if (auto main = upper_main(m, n)) best = std::min(best, *main);
  }
  return best;
}

SeriesValue bohr_series(std::int64_t n, double r, DegreeStrategy strategy, double tail_tol) {
  if (n < 2) throw DimensionError("bohr_series needs n >= 2");
  SeriesValue out;
  if (r <= 0.0) return out;
  if (r >= 1.0) {
    // U(m, n) >= 1 for every m, so the series diverges.
    out.value = kInf;
    out.tail = kInf;
    return out;
  }
  constexpr int kMaxTerms = 20000;
  const double log_r = std::log(r);
  double sum = 0.0;
  for (int m = 1; m <= kMaxTerms; ++m) {
    sum = next_up(sum + exp_up(up_log(m * log_r + log_degree_bound(m, n, strategy))));
    // Terms beyond m are dominated by t_k = r^k sqrt(C(n+k-1, k)), whose
    // ratio t_{k+1}/t_k = r sqrt((n+k)/(k+1)) decreases in k.
    const double q = next_up(r * std::sqrt(static_cast<double>(n + m + 1) / (m + 2)), 2);
    if (q < 1.0) {
      const double log_next = (m + 1) * log_r + log_trivial(m + 1, n);
      const double tail = next_up(exp_up(up_log(log_next)) / next_down(1.0 - q));
      if (tail <= tail_tol) {
        out.value = next_up(sum + tail);
        out.terms = m;
        out.tail = tail;
        return out;
      }
    }
    if (!std::isfinite(sum)) break;
  }
  out.value = kInf;
  out.tail = kInf;
  out.terms = kMaxTerms;
  return out;
}

BohrReport bohr_lower(std::int64_t n, double tol, DegreeStrategy strategy) {
  if (n < 2) throw DimensionError("bohr_lower needs n >= 2");
  if (!(tol > 0.0)) throw Error("tolerance must be positive");
  BohrReport report;
  report.n = n;
  report.strategy = strategy;
  const double log_n = std::log(static_cast<double>(n));
  report.r_upper = 2.0 * std::sqrt(log_n / static_cast<double>(n));

  double lo = 0.0;
  double hi = std::min(report.r_upper, 1.0);
  if (bohr_series(n, hi, strategy).value <= 0.5) {
    lo = hi;
  } else {
    int guard = 0;
    while (hi - lo > tol * hi) {
      if (++guard > 400) throw ConvergenceError("bisection did not converge");
      const double mid = 0.5 * (lo + hi);
      if (bohr_series(n, mid, strategy).value <= 0.5) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }
  const SeriesValue at = bohr_series(n, lo, strategy);
  report.r_lower = lo;
  report.terms_used = at.terms;
  report.tail_bound = at.tail;
  report.series_at_lower = at.value;
  report.b_estimate = lo * std::sqrt(static_cast<double>(n) / log_n);
  return report;
}

bool calculus_inequality_check(std::int64_t n, int m) {
  if (n < 1 || m < 1) throw DimensionError("calculus check needs n >= 1 and m >= 1");
  const double log_n = n == 1 ? 0.0 : log_up(static_cast<double>(n));
  double lhs = 1.0;
  for (int i = 0; i < m; ++i) lhs = next_up(lhs * log_n);
  const double rhs = to_double_down(BigInt(n) * factorial(static_cast<std::uint64_t>(m)));
  return lhs <= rhs;
}

GeneralPoly mobius_poly(double a, int degree) {
  if (degree < 1) throw DimensionError("Mobius truncation needs degree >= 1");
  // (a - z)/(1 - a z) = a - (1 - a^2) sum_{k>=1} a^{k-1} z^k
  std::vector<std::pair<MultiIndex, Complex>> terms;
  terms.emplace_back(MultiIndex{0}, Complex(a, 0.0));
  double power = 1.0;
  for (int k = 1; k <= degree; ++k) {
    terms.emplace_back(MultiIndex{k}, Complex(-(1.0 - a * a) * power, 0.0));
    power *= a;
  }
  return GeneralPoly::from_terms(1, terms);
}

double mobius_truncation_bound(double a, int degree, double r) {
  return next_up((1.0 - a * a) * std::pow(a, degree) * std::pow(r, degree + 1) / (1.0 - a * r), 4);
}

double mobius_majorant(double a, double r) { return a + (1.0 - a * a) * r / (1.0 - a * r); }

}  // namespace sidon
