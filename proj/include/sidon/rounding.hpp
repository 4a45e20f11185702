#pragma once

#include <cmath>
#include <limits>

namespace sidon {

// Directed-rounding helpers. Correctly rounded operations (+ - * / sqrt)
// are off by at most one ulp, so one step outward suffices; libm
// transcendentals are only faithful, so they get two steps.

inline double next_up(double x, int steps = 1) {
  for (int i = 0; i < steps; ++i) x = std::nextafter(x, std::numeric_limits<double>::infinity());
  return x;
}

inline double next_down(double x, int steps = 1) {
  for (int i = 0; i < steps; ++i) x = std::nextafter(x, -std::numeric_limits<double>::infinity());
  return x;
}

// The sign of the exact residual r*r - x decides the direction.
inline double sqrt_up(double x) {
  const double r = std::sqrt(x);
  return std::fma(r, r, -x) < 0.0 ? next_up(r) : r;
}
inline double sqrt_down(double x) {
  const double r = std::sqrt(x);
  return std::fma(r, r, -x) > 0.0 ? next_down(r) : r;
}
inline double exp_up(double x) { return next_up(std::exp(x), 2); }
inline double exp_down(double x) { return next_down(std::exp(x), 2); }
inline double log_up(double x) { return next_up(std::log(x), 2); }
inline double log_down(double x) { return next_down(std::log(x), 2); }

}  // namespace sidon
