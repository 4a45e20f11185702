#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace sidon {

/// Neumaier's compensated summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Fixed-shape pairwise reduction: the tree depends only on values.size(),
/// never on how the values were produced.
template <class T>
T pairwise_sum(std::span<const T> values) {
  if (values.empty()) return T{};
  if (values.size() == 1) return values[0];
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

template <class T>
T pairwise_sum(const std::vector<T>& values) {
  return pairwise_sum(std::span<const T>(values));
}

}  // namespace sidon
