#pragma once

// Sup norms ||P||_inf over the closed polydisc, computed on the torus
// |z_j| = 1 (maximum principle in each variable).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sidon/poly.hpp"
#include "sidon/torus_kernels.hpp"

namespace sidon {

inline constexpr std::size_t kDefaultGridBudget = std::size_t{1} << 24;

/// Phase vector theta, reduced into [0, 2 pi).
class TorusPoint {
 public:
  TorusPoint() = default;
  explicit TorusPoint(std::vector<double> phases);

  int size() const { return static_cast<int>(phases_.size()); }
  const std::vector<double>& phases() const { return phases_; }
  /// z_j = exp(i theta_j).
  std::vector<Complex> point() const;

 private:
  std::vector<double> phases_;
};

struct GridMaximum {
  double value = 0.0;
  TorusPoint argmax;
};

/// max |P| over theta_j in {2 pi k / N}; a lower bound for ||P||_inf.
/// Dense FFT evaluation when N^n <= fft_cap, direct sparse evaluation
/// otherwise. Throws BudgetError when N^n exceeds `budget`.
GridMaximum grid_lower_bound(const GeneralPoly& p, int N, std::size_t budget = kDefaultGridBudget,
                             std::size_t fft_cap = kDefaultGridBudget);

struct RefineOptions {
  int max_iterations = 200;
  double min_step = 1e-12;
  /// Safeguarded Newton steps after the gradient phase.
  int newton_steps = 8;
};

/// Backtracking gradient ascent on g = |P(e^{i theta})|^2 with the exact
/// analytic gradient, followed by safeguarded Newton polishing. The returned
/// point never has smaller g than `start`.
TorusPoint local_refine(const GeneralPoly& p, const TorusPoint& start, const RefineOptions& options = {});

/// Same ascent on an explicit trigonometric sum.
std::vector<double> refine_trig(const TrigPoly& f, std::vector<double> theta,
                                const RefineOptions& options = {});

struct SupNormOptions {
  double rel_err = 1e-6;
  std::size_t budget = kDefaultGridBudget;  // total grid evaluations
  std::size_t fft_cap = kDefaultGridBudget;
  int restarts = 8;
  std::uint64_t seed = 0;
  RefineOptions refine;
};

struct GridLevel {
  int grid_size = 0;
  double grid_max = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

struct SupNormResult {
  Enclosure enclosure;
  TorusPoint argmax;                     // best point found
  std::vector<TorusPoint> local_maxima;  // one per restart, in restart order
  bool budget_exhausted = false;
  std::size_t evaluations = 0;
  std::vector<GridLevel> levels;  // certification grids, coarse to fine
};

/// Certified enclosure of ||P||_inf.
///
/// The lower end comes from multi-start local ascent and grid maxima. The
/// upper end comes from a grid of step delta = 2 pi / N anchored at the best
/// point found. With sigma = (delta/2) * sum_j d_j (d_j the spread of the
/// exponents of variable j) both
///   hi = grid_max / (1 - sigma)            (sigma < 1)
///   hi = grid_max / sqrt(1 - sigma^2 / 2)  (sigma^2 < 2)
/// are valid: the first from Bernstein's inequality for f, the second from
/// Bernstein's inequality for the second derivative of |f|^2 along the
/// segment joining the maximizer to its nearest grid point (the first
/// derivative vanishes at the maximizer). N doubles until the relative
/// width is at most rel_err or the budget runs out. The result is finally
/// intersected with [0, l1 norm].
SupNormResult sup_norm(const GeneralPoly& p, const SupNormOptions& options = {});
SupNormResult sup_norm(const HomPoly& p, const SupNormOptions& options = {});

}  // namespace sidon
