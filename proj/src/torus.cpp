#include "sidon/torus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "sidon/error.hpp"
#include "sidon/rng.hpp"
#include "sidon/rounding.hpp"

namespace sidon {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

double wrap_phase(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

std::vector<Complex> grid_values(const TrigPoly& f, int N, std::span<const double> anchor,
                                 std::size_t fft_cap) {
  if (grid_size(N, f.dims) <= fft_cap) return grid_values_fft(f, N, anchor);
  return grid_values_omp(f, N, anchor);
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

TorusPoint::TorusPoint(std::vector<double> phases) : phases_(std::move(phases)) {
  for (double& t : phases_) t = wrap_phase(t);
}

std::vector<Complex> TorusPoint::point() const {
  std::vector<Complex> z;
  z.reserve(phases_.size());
  for (double t : phases_) z.push_back(std::polar(1.0, t));
  return z;
}

GridMaximum grid_lower_bound(const GeneralPoly& p, int N, std::size_t budget, std::size_t fft_cap) {
  if (N < 1) throw DimensionError("grid size must be >= 1");
  const TrigPoly f = torus_restriction(p);
  const std::size_t size = grid_size(N, f.dims);
  if (size > budget) {
    throw BudgetError("grid of " + std::to_string(N) + "^" + std::to_string(f.dims) +
                      " points exceeds the evaluation budget " + std::to_string(budget));
  }
  const std::vector<double> anchor(static_cast<std::size_t>(f.dims), 0.0);
  const auto values = grid_values(f, N, anchor, fft_cap);
  const GridScan scan = scan_max(values);
  return {scan.max_abs, TorusPoint(grid_point(scan.argmax, f.dims, N, anchor))};
}

std::vector<double> refine_trig(const TrigPoly& f, std::vector<double> theta,
                                const RefineOptions& options) {
  const std::vector<double> start = theta;
  TrigJet jet = trig_jet(f, theta, false);
  const double g_start = jet.g;
  double g = jet.g;
  if (f.dims == 0 || g == 0.0) return theta;

  const double spread = std::max(1, f.total_spread());
  double step = 1.0 / (2.0 * g * spread * spread);
  std::vector<double> candidate(theta.size());

  for (int it = 0; it < options.max_iterations; ++it) {
    const double gnorm = norm2(jet.grad);
    if (gnorm == 0.0) break;
    bool accepted = false;
    while (step * gnorm >= options.min_step) {
      for (std::size_t j = 0; j < theta.size(); ++j) candidate[j] = theta[j] + step * jet.grad[j];
      const double gc = std::norm(trig_value(f, candidate));
      if (gc > g) {
        theta = candidate;
        g = gc;
        jet = trig_jet(f, theta, false);
        step *= 2.0;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }

  const auto d = static_cast<Eigen::Index>(f.dims);
  for (int s = 0; s < options.newton_steps; ++s) {
    jet = trig_jet(f, theta, true);
    const Eigen::Map<const Eigen::MatrixXd> hess(jet.hess.data(), d, d);
    const Eigen::Map<const Eigen::VectorXd> grad(jet.grad.data(), d);
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(-hess);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
        (ldlt.vectorD().array() <= 0.0).any()) {
      break;
    }
    const Eigen::VectorXd delta = ldlt.solve(grad);
    for (std::size_t j = 0; j < theta.size(); ++j) candidate[j] = theta[j] + delta[static_cast<Eigen::Index>(j)];
    const TrigJet next = trig_jet(f, candidate, false);
    if (next.g < jet.g * (1.0 - 4.0 * kEps) || norm2(next.grad) >= norm2(jet.grad)) break;
    theta = candidate;
  }

  if (std::norm(trig_value(f, theta)) < g_start) return start;
  return theta;
}

TorusPoint local_refine(const GeneralPoly& p, const TorusPoint& start, const RefineOptions& options) {
  const TrigPoly f = torus_restriction(p);
  if (start.size() != f.dims) throw DimensionError("start point length mismatch");
  return TorusPoint(refine_trig(f, start.phases(), options));
}

SupNormResult sup_norm(const HomPoly& p, const SupNormOptions& options) {
  return sup_norm(GeneralPoly(p), options);
}

SupNormResult sup_norm(const GeneralPoly& p, const SupNormOptions& options) {
  if (!(options.rel_err > 0.0)) throw Error("rel_err must be positive");
  SupNormResult result;
  const int n = p.num_vars();
  if (p.is_zero()) {
    result.enclosure = Enclosure(0.0, 0.0, "zero polynomial");
    result.argmax = TorusPoint(std::vector<double>(static_cast<std::size_t>(n), 0.0));
    return result;
  }

  const std::size_t term_count = p.size();
  const double l1_up = next_up(l1_coeff_norm(p) * (1.0 + 2.0 * static_cast<double>(term_count) * kEps));
  const ReducedTrig reduced = reduce_for_torus(p);
  const TrigPoly& f = reduced.poly;
  const int d = f.dims;
  const double err_point = f.evaluation_error_bound(1);

  if (d == 0) {
    // |P| is constant on the torus.
    Complex v(0.0, 0.0);
    for (const Complex& c : f.coeffs) v += c;
    double lo = std::abs(v);
    double hi = lo;
    const bool exact = f.terms() == 1 && (v.real() == 0.0 || v.imag() == 0.0);
    if (!exact) {
      lo = std::max(0.0, next_down(lo - err_point));
      hi = next_up(hi + err_point);
    }
    result.enclosure = Enclosure(lo, std::min(hi, l1_up), "constant modulus");
    result.argmax = TorusPoint(std::vector<double>(static_cast<std::size_t>(n), 0.0));
    result.local_maxima.push_back(result.argmax);
    return result;
  }

  // Multi-start: a coarse grid with a random offset per restart, then ascent
  // from its best point.
  const int restarts = std::max(1, options.restarts);
  const double per_restart = static_cast<double>(options.budget) / (8.0 * restarts);
  int coarse = static_cast<int>(std::floor(std::pow(per_restart, 1.0 / d)));
  coarse = std::clamp(coarse, 2, 64);
  const std::size_t coarse_cost = grid_size(coarse, d);

  std::vector<std::vector<double>> starts(static_cast<std::size_t>(restarts));
  std::vector<double> start_g(static_cast<std::size_t>(restarts), 0.0);
#pragma omp parallel for schedule(static, 1)
  for (int r = 0; r < restarts; ++r) {
    CounterRng rng(derive_seed(options.seed, static_cast<std::uint64_t>(r)));
    std::vector<double> anchor(static_cast<std::size_t>(d));
    for (double& a : anchor) a = rng.uniform(0.0, kTwoPi / coarse);
    const auto values = grid_values(f, coarse, anchor, options.fft_cap);
    const GridScan scan = scan_max(values);
    auto theta = refine_trig(f, grid_point(scan.argmax, d, coarse, anchor), options.refine);
    start_g[static_cast<std::size_t>(r)] = std::norm(trig_value(f, theta));
    starts[static_cast<std::size_t>(r)] = std::move(theta);
  }
  result.evaluations += coarse_cost * static_cast<std::size_t>(restarts);

  std::size_t best = 0;
  for (std::size_t r = 1; r < starts.size(); ++r) {
    if (start_g[r] > start_g[best]) best = r;
  }
  for (const auto& theta : starts) result.local_maxima.emplace_back(reduced.expand(theta));
  std::vector<double> anchor = starts[best];
  std::vector<double> best_theta = anchor;
  double best_value = std::abs(trig_value(f, best_theta));

  double lo = std::max(0.0, next_down(best_value - err_point));
  double hi = l1_up;
  std::string method = "l1 norm";

  const int spread = f.total_spread();
  int N = 8;
  while (N < 4 * spread) N *= 2;

  for (;;) {
    const std::size_t cost = grid_size(N, d);
    if (cost == std::numeric_limits<std::size_t>::max() || result.evaluations + cost > options.budget) {
      result.budget_exhausted = true;
      break;
    }
    const auto values = grid_values(f, N, anchor, options.fft_cap);
    const GridScan scan = scan_max(values);
    result.evaluations += cost;
    const double err = f.evaluation_error_bound(cost);
    const double grid_max = scan.max_abs;
    lo = std::max(lo, next_down(grid_max - err));

    if (grid_max > best_value * (1.0 + 1e-12)) {
      // The grid found higher ground than the multi-start did.
      auto theta = refine_trig(f, grid_point(scan.argmax, d, N, anchor), options.refine);
      const double value = std::abs(trig_value(f, theta));
      if (value > best_value) {
        best_value = value;
        best_theta = std::move(theta);
        lo = std::max(lo, next_down(best_value - err_point));
      }
    }

    const double top = next_up(grid_max + err);
    const double sigma = next_up(std::numbers::pi * spread / N, 2);
    if (sigma < 1.0) {
      const double bound = next_up(top / next_down(1.0 - sigma));
      if (bound < hi) {
        hi = bound;
        method = "grid + first-order Bernstein";
      }
    }
    if (sigma * sigma < 2.0) {
      const double bound = next_up(top / sqrt_down(next_down(1.0 - next_up(sigma * sigma) / 2.0)), 2);
      if (bound < hi) {
        hi = bound;
        method = "grid + second-order Bernstein";
      }
    }
    result.levels.push_back({N, grid_max, lo, hi});
    if (hi <= lo * (1.0 + options.rel_err)) break;
    N *= 2;
  }

  lo = std::min(lo, hi);
  result.enclosure = Enclosure(lo, hi, method);
  result.argmax = TorusPoint(reduced.expand(best_theta));
  return result;
}

}  // namespace sidon
