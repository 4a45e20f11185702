#include "sidon/torus_kernels.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

#include <fftw3.h>

#include "sidon/error.hpp"
#include "sidon/summation.hpp"

namespace sidon {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// FFTW's planner is not reentrant.
std::mutex& fftw_planner_mutex() {
  static std::mutex mutex;
  return mutex;
}

}  // namespace

int TrigPoly::total_spread() const {
  int total = 0;
  for (int s : spread) total += s;
  return total;
}

double TrigPoly::l1() const {
  CompensatedSum sum;
  for (const Complex& c : coeffs) sum.add(std::abs(c));
  return sum.value();
}

double TrigPoly::evaluation_error_bound(std::size_t grid_points) const {
  const double log_points = std::log2(static_cast<double>(std::max<std::size_t>(grid_points, 2)));
  const double ops = 4.0 * static_cast<double>(terms()) + 4.0 * dims +
                     (kTwoPi + 2.0) * total_spread() + 8.0 * log_points + 16.0;
  return l1() * kEps * ops;
}

TrigPoly torus_restriction(const GeneralPoly& p) {
  const int n = p.num_vars();
  const auto terms = p.all_terms();
  TrigPoly f;
  f.dims = n;
  std::vector<int> lo(static_cast<std::size_t>(n), std::numeric_limits<int>::max());
  std::vector<int> hi(static_cast<std::size_t>(n), 0);
  for (const auto& [alpha, c] : terms) {
    for (int j = 0; j < n; ++j) {
      lo[static_cast<std::size_t>(j)] = std::min(lo[static_cast<std::size_t>(j)], alpha[j]);
      hi[static_cast<std::size_t>(j)] = std::max(hi[static_cast<std::size_t>(j)], alpha[j]);
    }
  }
  f.spread.assign(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n && !terms.empty(); ++j) {
    f.spread[static_cast<std::size_t>(j)] = hi[static_cast<std::size_t>(j)] - lo[static_cast<std::size_t>(j)];
  }
  for (const auto& [alpha, c] : terms) {
    for (int j = 0; j < n; ++j) f.exponents.push_back(alpha[j] - lo[static_cast<std::size_t>(j)]);
    f.coeffs.push_back(c);
  }
  return f;
}

std::vector<double> ReducedTrig::expand(std::span<const double> reduced) const {
  std::vector<double> full(static_cast<std::size_t>(full_dims), 0.0);
  for (std::size_t r = 0; r < kept.size(); ++r) full[static_cast<std::size_t>(kept[r])] = reduced[r];
  return full;
}

ReducedTrig reduce_for_torus(const GeneralPoly& p) {
  const TrigPoly full = torus_restriction(p);
  ReducedTrig out;
  out.full_dims = full.dims;
  for (int j = 0; j < full.dims; ++j) {
    if (full.spread[static_cast<std::size_t>(j)] > 0) out.kept.push_back(j);
  }

  bool homogeneous_in_kept = !out.kept.empty() && full.terms() > 0;
  int common_degree = -1;
  for (std::size_t t = 0; t < full.terms() && homogeneous_in_kept; ++t) {
    int degree = 0;
    for (int j : out.kept) degree += full.exponent(t, j);
    if (common_degree < 0) common_degree = degree;
    homogeneous_in_kept = degree == common_degree;
  }
  if (homogeneous_in_kept) {
    std::size_t widest = 0;
    for (std::size_t r = 1; r < out.kept.size(); ++r) {
      if (full.spread[static_cast<std::size_t>(out.kept[r])] >
          full.spread[static_cast<std::size_t>(out.kept[widest])]) {
        widest = r;
      }
    }
    out.pinned = out.kept[widest];
    out.kept.erase(out.kept.begin() + static_cast<std::ptrdiff_t>(widest));
  }

  // Terms that coincide after dropping/pinning are the same function.
  std::map<std::vector<int>, Complex> merged;
  for (std::size_t t = 0; t < full.terms(); ++t) {
    std::vector<int> key;
    key.reserve(out.kept.size());
    for (int j : out.kept) key.push_back(full.exponent(t, j));
    merged[key] += full.coeffs[t];
  }

  TrigPoly& f = out.poly;
  f.dims = static_cast<int>(out.kept.size());
  f.spread.assign(out.kept.size(), 0);
  std::vector<int> lo(out.kept.size(), std::numeric_limits<int>::max());
  for (const auto& [key, c] : merged) {
    for (std::size_t r = 0; r < key.size(); ++r) lo[r] = std::min(lo[r], key[r]);
  }
  for (const auto& [key, c] : merged) {
    if (c == Complex(0.0, 0.0)) continue;
    for (std::size_t r = 0; r < key.size(); ++r) {
      f.exponents.push_back(key[r] - lo[r]);
      f.spread[r] = std::max(f.spread[r], key[r] - lo[r]);
    }
    f.coeffs.push_back(c);
  }
  return out;
}

std::size_t grid_size(int N, int dims) {
  std::size_t size = 1;
  for (int j = 0; j < dims; ++j) {
    if (size > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(N)) {
      return std::numeric_limits<std::size_t>::max();
    }
    size *= static_cast<std::size_t>(N);
  }
  return size;
}

std::vector<double> grid_point(std::size_t flat, int dims, int N, std::span<const double> anchor) {
  std::vector<double> theta(static_cast<std::size_t>(dims));
  for (int j = dims - 1; j >= 0; --j) {
    const auto k = flat % static_cast<std::size_t>(N);
    flat /= static_cast<std::size_t>(N);
    theta[static_cast<std::size_t>(j)] =
        anchor[static_cast<std::size_t>(j)] + kTwoPi * static_cast<double>(k) / N;
  }
  return theta;
}

namespace {

// Per-dimension unimodular bases exp(i (a_j + 2 pi k / N)), k = 0..N-1.
std::vector<Complex> axis_bases(int dims, int N, std::span<const double> anchor) {
  std::vector<Complex> bases(static_cast<std::size_t>(dims) * static_cast<std::size_t>(N));
  for (int j = 0; j < dims; ++j) {
    for (int k = 0; k < N; ++k) {
      bases[static_cast<std::size_t>(j) * N + k] =
          std::polar(1.0, anchor[static_cast<std::size_t>(j)] + kTwoPi * k / N);
    }
  }
  return bases;
}

// Direct sparse evaluation at one grid point. `powers` is scratch space of
// size sum_j (spread_j + 1).
Complex sparse_point(const TrigPoly& f, int N, const std::vector<Complex>& bases,
                     std::size_t flat, std::vector<Complex>& powers,
                     const std::vector<std::size_t>& offsets) {
  for (int j = f.dims - 1; j >= 0; --j) {
    const auto k = flat % static_cast<std::size_t>(N);
    flat /= static_cast<std::size_t>(N);
    const Complex base = bases[static_cast<std::size_t>(j) * N + k];
    Complex* pw = powers.data() + offsets[static_cast<std::size_t>(j)];
    pw[0] = Complex(1.0, 0.0);
    for (int e = 1; e <= f.spread[static_cast<std::size_t>(j)]; ++e) pw[e] = pw[e - 1] * base;
  }
  Complex value(0.0, 0.0);
  for (std::size_t t = 0; t < f.terms(); ++t) {
    Complex term = f.coeffs[t];
    for (int j = 0; j < f.dims; ++j) term *= powers[offsets[static_cast<std::size_t>(j)] + f.exponent(t, j)];
    value += term;
  }
  return value;
}

std::vector<std::size_t> power_offsets(const TrigPoly& f) {
  std::vector<std::size_t> offsets(static_cast<std::size_t>(f.dims) + 1, 0);
  for (int j = 0; j < f.dims; ++j) {
    offsets[static_cast<std::size_t>(j) + 1] =
        offsets[static_cast<std::size_t>(j)] + static_cast<std::size_t>(f.spread[static_cast<std::size_t>(j)]) + 1;
  }
  return offsets;
}

void check_grid(const TrigPoly& f, int N, std::span<const double> anchor) {
  if (N < 1) throw DimensionError("grid size must be >= 1");
  if (static_cast<int>(anchor.size()) != f.dims) throw DimensionError("anchor length mismatch");
  if (grid_size(N, f.dims) == std::numeric_limits<std::size_t>::max()) {
    throw BudgetError("grid size overflows");
  }
}

}  // namespace

std::vector<Complex> grid_values_serial(const TrigPoly& f, int N, std::span<const double> anchor) {
  check_grid(f, N, anchor);
  const std::size_t size = grid_size(N, f.dims);
  const auto bases = axis_bases(f.dims, N, anchor);
  const auto offsets = power_offsets(f);
  std::vector<Complex> powers(offsets.back());
  std::vector<Complex> values(size);
  for (std::size_t flat = 0; flat < size; ++flat) {
    values[flat] = sparse_point(f, N, bases, flat, powers, offsets);
  }
  return values;
}

std::vector<Complex> grid_values_omp(const TrigPoly& f, int N, std::span<const double> anchor) {
  check_grid(f, N, anchor);
  const std::size_t size = grid_size(N, f.dims);
  const auto bases = axis_bases(f.dims, N, anchor);
  const auto offsets = power_offsets(f);
  std::vector<Complex> values(size);
#pragma omp parallel
  {
    std::vector<Complex> powers(offsets.back());
#pragma omp for schedule(static)
    for (std::ptrdiff_t flat = 0; flat < static_cast<std::ptrdiff_t>(size); ++flat) {
      values[static_cast<std::size_t>(flat)] =
          sparse_point(f, N, bases, static_cast<std::size_t>(flat), powers, offsets);
    }
  }
  return values;
}

std::vector<Complex> grid_values_fft(const TrigPoly& f, int N, std::span<const double> anchor) {
  check_grid(f, N, anchor);
  if (f.dims == 0) {
    Complex sum(0.0, 0.0);
    for (const Complex& c : f.coeffs) sum += c;
    return {sum};
  }
  const std::size_t size = grid_size(N, f.dims);
  std::vector<Complex> tensor(size, Complex(0.0, 0.0));
  for (std::size_t t = 0; t < f.terms(); ++t) {
    std::size_t flat = 0;
    double phase = 0.0;
    for (int j = 0; j < f.dims; ++j) {
      const int e = f.exponent(t, j);
      flat = flat * static_cast<std::size_t>(N) + static_cast<std::size_t>(e % N);
      phase += e * anchor[static_cast<std::size_t>(j)];
    }
    tensor[flat] += f.coeffs[t] * std::polar(1.0, phase);
  }

  std::vector<int> shape(static_cast<std::size_t>(f.dims), N);
  auto* data = reinterpret_cast<fftw_complex*>(tensor.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan = fftw_plan_dft(f.dims, shape.data(), data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw Error("FFTW could not create a plan");
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  return tensor;
}

GridScan scan_max(std::span<const Complex> values) {
  GridScan best;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double a = std::abs(values[i]);
    if (a > best.max_abs) {
      best.max_abs = a;
      best.argmax = i;
    }
  }
  return best;
}

TrigJet trig_jet(const TrigPoly& f, std::span<const double> theta, bool with_hessian) {
  const auto d = static_cast<std::size_t>(f.dims);
  TrigJet jet;
  jet.value = Complex(0.0, 0.0);
  std::vector<Complex> df(d, Complex(0.0, 0.0));
  std::vector<Complex> ddf(with_hessian ? d * d : 0, Complex(0.0, 0.0));
  for (std::size_t t = 0; t < f.terms(); ++t) {
    double phase = 0.0;
    for (std::size_t j = 0; j < d; ++j) phase += f.exponent(t, static_cast<int>(j)) * theta[j];
    const Complex v = f.coeffs[t] * std::polar(1.0, phase);
    jet.value += v;
    for (std::size_t j = 0; j < d; ++j) {
      const double kj = f.exponent(t, static_cast<int>(j));
      df[j] += Complex(0.0, kj) * v;
      if (with_hessian) {
        for (std::size_t l = 0; l < d; ++l) ddf[j * d + l] -= kj * f.exponent(t, static_cast<int>(l)) * v;
      }
    }
  }
  jet.g = std::norm(jet.value);
  jet.grad.resize(d);
  for (std::size_t j = 0; j < d; ++j) jet.grad[j] = 2.0 * std::real(std::conj(jet.value) * df[j]);
  if (with_hessian) {
    jet.hess.resize(d * d);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t l = 0; l < d; ++l) {
        jet.hess[j * d + l] =
            2.0 * std::real(std::conj(df[j]) * df[l] + std::conj(jet.value) * ddf[j * d + l]);
      }
    }
  }
  return jet;
}

Complex trig_value(const TrigPoly& f, std::span<const double> theta) {
  Complex value(0.0, 0.0);
  for (std::size_t t = 0; t < f.terms(); ++t) {
    double phase = 0.0;
    for (int j = 0; j < f.dims; ++j) phase += f.exponent(t, j) * theta[static_cast<std::size_t>(j)];
    value += f.coeffs[t] * std::polar(1.0, phase);
  }
  return value;
}

}  // namespace sidon
