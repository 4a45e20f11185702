#include "sidon/polarize.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "sidon/error.hpp"
#include "sidon/summation.hpp"

namespace sidon {

namespace {

void check_points(const HomPoly& p, std::span<const std::vector<Complex>> points) {
  const int m = p.degree();
  if (static_cast<int>(points.size()) != m) {
    throw ArityError("the form takes " + std::to_string(m) + " points, got " +
                     std::to_string(points.size()));
  }
  if (m > kMaxPolarizationDegree) {
    throw BudgetError("polarization sum of 2^" + std::to_string(m) + " terms exceeds 2^" +
                      std::to_string(kMaxPolarizationDegree));
  }
  for (const auto& z : points) {
    if (static_cast<int>(z.size()) != p.num_vars()) throw DimensionError("point length mismatch");
  }
}

// eps_1...eps_m P(sum_i eps_i z^(i)) for the sign pattern `mask` (bit i set
// means eps_i = -1).
Complex signed_term(const HomPoly& p, std::span<const std::vector<Complex>> points,
                    std::uint32_t mask, std::vector<Complex>& scratch) {
  std::fill(scratch.begin(), scratch.end(), Complex(0.0, 0.0));
  int negatives = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const bool negative = (mask >> i) & 1U;
    negatives += negative;
    const auto& z = points[i];
    for (std::size_t j = 0; j < scratch.size(); ++j) scratch[j] += negative ? -z[j] : z[j];
  }
  const Complex value = evaluate(p, scratch);
  return (negatives % 2 == 0) ? value : -value;
}

double normalizer(int m) {
  double denom = std::ldexp(1.0, m);
  for (int i = 2; i <= m; ++i) denom *= i;
  return denom;
}

}  // namespace

Complex polarize_eval_serial(const HomPoly& p, std::span<const std::vector<Complex>> points) {
  check_points(p, points);
  const int m = p.degree();
  std::vector<Complex> scratch(static_cast<std::size_t>(p.num_vars()));
  Complex sum(0.0, 0.0);
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) sum += signed_term(p, points, mask, scratch);
  return sum / normalizer(m);
}

Complex polarize_eval(const HomPoly& p, std::span<const std::vector<Complex>> points) {
  check_points(p, points);
  const int m = p.degree();
  // Fixed block decomposition: 2^min(m, 8) blocks, each summed sequentially.
  const int block_bits = std::min(m, 8);
  const std::uint32_t blocks = 1U << block_bits;
  const std::uint32_t per_block = 1U << (m - block_bits);
  std::vector<Complex> partial(blocks);
#pragma omp parallel
  {
    std::vector<Complex> scratch(static_cast<std::size_t>(p.num_vars()));
#pragma omp for schedule(static)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
      Complex sum(0.0, 0.0);
      const auto first = static_cast<std::uint32_t>(b) * per_block;
      for (std::uint32_t mask = first; mask < first + per_block; ++mask) {
        sum += signed_term(p, points, mask, scratch);
      }
      partial[static_cast<std::size_t>(b)] = sum;
    }
  }
  return pairwise_sum(partial) / normalizer(m);
}

Complex SymForm::coefficient(const IndexWord& beta) const { return form_coefficient(source_, beta); }

Complex SymForm::operator()(std::span<const std::vector<Complex>> points) const {
  return polarize_eval(source_, points);
}

Complex form_coefficient(const HomPoly& p, const IndexWord& beta) {
  if (beta.size() != p.degree()) throw ArityError("word length differs from the degree");
  const MultiIndex alpha = beta.profile(p.num_vars());
  const Complex c = p.coefficient(alpha);
  if (c == Complex(0.0, 0.0)) return c;
  return c / static_cast<double>(word_count(alpha));
}

double form_l1_norm(const HomPoly& p) {
  CompensatedSum sum;
  for (const auto& [alpha, c] : p.terms()) {
    const auto h = static_cast<double>(word_count(alpha));
    sum.add(h * (std::abs(c) / h));
  }
  return sum.value();
}

double harris_constant(int m, std::span<const int> parts) {
  long total = 0;
  for (int part : parts) {
    if (part < 1) throw PartitionError("parts must be positive");
    total += part;
  }
  if (total != m || m < 1) {
    throw PartitionError("parts sum to " + std::to_string(total) + ", expected " + std::to_string(m));
  }
  BigInt numerator = boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(m));
  BigInt denominator = factorial(static_cast<std::uint64_t>(m));
  for (int part : parts) {
    numerator *= factorial(static_cast<std::uint64_t>(part));
    denominator *= boost::multiprecision::pow(BigInt(part), static_cast<unsigned>(part));
  }
  return boost::multiprecision::cpp_rational(numerator, denominator).convert_to<double>();
}

std::vector<std::vector<Complex>> repeat_points(std::span<const std::vector<Complex>> points,
                                                std::span<const int> parts) {
  if (points.size() != parts.size()) throw ArityError("one multiplicity per point required");
  std::vector<std::vector<Complex>> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int r = 0; r < parts[i]; ++r) out.push_back(points[i]);
  }
  return out;
}

}  // namespace sidon
