#include "sidon/kernel.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "sidon/combinat.hpp"
#include "sidon/error.hpp"
#include "sidon/rng.hpp"
#include "sidon/rounding.hpp"
#include "sidon/summation.hpp"

namespace sidon {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
const Complex kI(0.0, 1.0);

// (p / (2 pi i)) (exp(2 pi i k / p) - 1) = integral over [0,1] of exp(2 pi i k t / p), scaled by k.
Complex prime_factor(std::uint32_t p, int k) {
  const double angle = 2.0 * kPi * k / p;
  return (static_cast<double>(p) / (2.0 * kPi * k * kI)) * (std::polar(1.0, angle) - 1.0);
}

// -log(sin x / x), with the Taylor series below 0.1 so that tiny terms keep
// full relative accuracy.
double neg_log_sinc(double x) {
  if (x < 0.1) {
    const double x2 = x * x;
    return x2 * (1.0 / 6 + x2 * (1.0 / 180 + x2 * (1.0 / 2835 + x2 * (1.0 / 37800 + x2 / 467775))));
  }
  return -std::log(std::sin(x) / x);
}

}  // namespace

KernelSpec make_kernel(int m) {
  if (m < 1) throw DimensionError("kernel degree must be >= 1");
  KernelSpec spec;
  spec.m = m;
  spec.primes = primes_upto(m);
  Complex product(1.0, 0.0);
  for (std::uint32_t p : spec.primes) product *= prime_factor(p, 1);
  spec.c = 1.0 / product;
  return spec;
}

Complex r_eval(const KernelSpec& spec, std::span<const double> t) {
  if (t.size() != spec.primes.size()) {
    throw DimensionError("kernel argument needs " + std::to_string(spec.primes.size()) + " coordinates");
  }
  double phase = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) phase += t[k] / spec.primes[k];
  return spec.c * std::polar(1.0, 2.0 * kPi * phase);
}

Complex moment(int m, int k) {
  if (m < 1 || k < 1) throw DimensionError("moment needs m >= 1 and k >= 1");
  if (k == 1) return {1.0, 0.0};
  const auto primes = primes_upto(m);
  for (std::uint32_t p : primes) {
    if (k % static_cast<int>(p) == 0) return {0.0, 0.0};
  }
  Complex value(1.0, 0.0);
  for (std::uint32_t p : primes) value *= prime_factor(p, k) / std::pow(prime_factor(p, 1), k);
  return value;
}

LogKappaPartial log_kappa_partial(double limit) {
  LogKappaPartial out;
  CompensatedSum sum;
  double error = 0.0;
  for (std::uint32_t p : primes_upto(limit)) {
    const double x = kPi / p;
    const double term = neg_log_sinc(x);
    sum.add(term);
    error += (x < 0.1) ? 8.0 * kEps * term : 8.0 * kEps;
    ++out.primes;
  }
  out.sum = sum.value();
  out.error = error + 4.0 * kEps * out.sum;
  return out;
}

Enclosure kappa(double tol, double prime_cap) {
  if (!(tol > 0.0)) throw Error("kappa tolerance must be positive");
  static std::mutex cache_mutex;
  static std::map<std::pair<double, double>, Enclosure> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({tol, prime_cap});
    if (it != cache.end()) return it->second;
  }

  // kappa < 2.3, so a tail of tol / 2.5 in log space keeps the width below tol.
  double limit = std::max(16.0, std::ceil(kPi * kPi / 6.0 / (tol / 2.5)));
  for (;;) {
    if (limit > prime_cap) {
      throw BudgetError("kappa to width " + std::to_string(tol) + " needs primes beyond the cap " +
                        std::to_string(prime_cap));
    }
    const LogKappaPartial partial = log_kappa_partial(limit);
    // (pi^2/6) / (P (1 - 1/P^2)), rounded up
    const double tail = next_up(next_up(kPi * kPi / 6.0, 2) / next_down(limit * next_down(1.0 - 1.0 / (limit * limit))), 2);
    const double lo = exp_down(next_down(partial.sum - partial.error));
    const double hi = exp_up(next_up(partial.sum + partial.error + tail, 2));
    if (hi - lo <= tol) {
      Enclosure result(lo, hi,
                       "prime product to " + std::to_string(static_cast<long long>(limit)) +
                           " plus certified tail");
      std::lock_guard<std::mutex> lock(cache_mutex);
      cache.emplace(std::make_pair(tol, prime_cap), result);
      return result;
    }
    limit *= 2.0;
  }
}

namespace {

constexpr std::size_t kBlock = 1024;

struct Moments {
  double count = 0.0;
  Complex mean{0.0, 0.0};
  double m2 = 0.0;  // sum |x - mean|^2

  void add(Complex x) {
    count += 1.0;
    const Complex delta = x - mean;
    mean += delta / count;
    m2 += std::real(std::conj(delta) * (x - mean));
  }

  // Chan et al. pairwise update.
  void merge(const Moments& other) {
    if (other.count == 0.0) return;
    const double total = count + other.count;
    const Complex delta = other.mean - mean;
    mean += delta * (other.count / total);
    m2 += other.m2 + std::norm(delta) * count * other.count / total;
    count = total;
  }
};

Complex draw_sample(const HomPoly& p, const KernelSpec& spec, std::span<const Complex> z,
                    std::uint64_t seed, std::size_t index, std::vector<Complex>& w,
                    std::vector<double>& t) {
  CounterRng rng(derive_seed(seed, index));
  for (std::size_t j = 0; j < z.size(); ++j) {
    for (double& tk : t) tk = rng.uniform();
    w[j] = z[j] * r_eval(spec, t);
  }
  return evaluate(p, w);
}

void check_mc(const HomPoly& p, std::span<const Complex> z, std::size_t samples) {
  if (samples < 100) throw Error("Monte Carlo projection needs at least 100 samples");
  if (static_cast<int>(z.size()) != p.num_vars()) throw DimensionError("point length mismatch");
}

MonteCarloEstimate finish(const Moments& total) {
  MonteCarloEstimate out;
  out.estimate = total.mean;
  out.samples = static_cast<std::size_t>(total.count);
  out.stderr_ = std::sqrt(total.m2 / (total.count - 1.0) / total.count);
  return out;
}

}  // namespace

MonteCarloEstimate project_tetra_mc_serial(const HomPoly& p, std::span<const Complex> z,
                                           std::size_t samples, std::uint64_t seed) {
  check_mc(p, z, samples);
  const KernelSpec spec = make_kernel(std::max(1, p.degree()));
  std::vector<Complex> w(z.size());
  std::vector<double> t(spec.primes.size());
  Moments total;
  for (std::size_t s = 0; s < samples; ++s) total.add(draw_sample(p, spec, z, seed, s, w, t));
  return finish(total);
}

MonteCarloEstimate project_tetra_mc(const HomPoly& p, std::span<const Complex> z, std::size_t samples,
                                    std::uint64_t seed) {
  check_mc(p, z, samples);
  const KernelSpec spec = make_kernel(std::max(1, p.degree()));
  const std::size_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<Moments> partial(blocks);
#pragma omp parallel
  {
    std::vector<Complex> w(z.size());
    std::vector<double> t(spec.primes.size());
#pragma omp for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
      const std::size_t first = static_cast<std::size_t>(b) * kBlock;
      const std::size_t last = std::min(samples, first + kBlock);
      Moments local;
      for (std::size_t s = first; s < last; ++s) local.add(draw_sample(p, spec, z, seed, s, w, t));
      partial[static_cast<std::size_t>(b)] = local;
    }
  }
  Moments total;
  for (const Moments& block : partial) total.merge(block);
  return finish(total);
}

}  // namespace sidon
