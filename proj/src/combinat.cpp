#include "sidon/combinat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sidon/error.hpp"
#include "sidon/rounding.hpp"

namespace sidon {

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw DimensionError("negative exponent in multi-index");
    degree_ += e;
  }
}

int MultiIndex::max_exponent() const {
  return exponents_.empty() ? 0 : *std::max_element(exponents_.begin(), exponents_.end());
}

bool MonomialOrder::operator()(const MultiIndex& a, const MultiIndex& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                      a.exponents().begin(), a.exponents().end());
}

IndexWord IndexWord::canonical() const {
  std::vector<int> sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  return IndexWord(std::move(sorted));
}

bool IndexWord::is_tetrahedral() const {
  std::vector<int> sorted = canonical().letters();
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

MultiIndex IndexWord::profile(int n) const {
  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  for (int letter : letters_) {
    if (letter < 1 || letter > n) {
      throw DimensionError("letter " + std::to_string(letter) + " outside 1.." +
                           std::to_string(n));
    }
    ++alpha[static_cast<std::size_t>(letter - 1)];
  }
  return MultiIndex(std::move(alpha));
}

namespace {

void enumerate_into(std::vector<int>& current, int position, int remaining,
                    std::vector<MultiIndex>& out) {
  const int n = static_cast<int>(current.size());
  if (position == n - 1) {
    current[static_cast<std::size_t>(position)] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[static_cast<std::size_t>(position)] = e;
    enumerate_into(current, position + 1, remaining - e, out);
  }
}

}  // namespace

std::vector<MultiIndex> enum_multi_indices(int n, int m, std::size_t cap) {
  if (n < 1 || m < 0) throw DimensionError("enum_multi_indices needs n >= 1 and m >= 0");
  const BigInt count = binomial(static_cast<std::uint64_t>(n + m - 1), static_cast<std::uint64_t>(m));
  if (count > BigInt(cap)) {
    throw CapacityError("C(n+m-1, m) = " + count.str() + " monomials exceeds the enumeration cap " +
                        std::to_string(cap));
  }
  std::vector<MultiIndex> out;
  out.reserve(count.convert_to<std::size_t>());
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  enumerate_into(current, 0, m, out);
  return out;
}

std::uint64_t word_count(const MultiIndex& alpha) {
  // m!/prod alpha_j! = prod_j C(alpha_1 + ... + alpha_j, alpha_j)
  std::uint64_t result = 1;
  std::uint64_t partial = 0;
  for (int e : alpha.exponents()) {
    for (int i = 1; i <= e; ++i) {
      ++partial;
      // result * partial / i stays integral at each step: it is
      // (previous count) * C(partial, i).
      unsigned __int128 wide = static_cast<unsigned __int128>(result) * partial;
      wide /= static_cast<unsigned>(i);
      if (wide > std::numeric_limits<std::uint64_t>::max()) {
        throw OverflowError("word count exceeds 64-bit range");
      }
      result = static_cast<std::uint64_t>(wide);
    }
  }
  return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

// convert_to<double> of an integer yields an integral double (below 2^53
// every integer is exact, above it every double is integral), so BigInt(d)
// is exact and the comparisons below are exact.
double to_double_up(const BigInt& x) {
  double d = x.convert_to<double>();
  if (std::isinf(d)) return d;
  while (BigInt(d) < x) d = next_up(d);
  return d;
}

double to_double_down(const BigInt& x) {
  double d = x.convert_to<double>();
  if (std::isinf(d)) d = std::numeric_limits<double>::max();
  while (BigInt(d) > x) d = next_down(d);
  return d;
}

std::vector<std::uint32_t> primes_upto(double x) {
  if (!(x >= 2.0)) return {};
  const auto limit = static_cast<std::size_t>(std::floor(x));
  std::vector<std::uint8_t> composite(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::size_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::size_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

std::size_t prime_count(double x) { return primes_upto(x).size(); }

}  // namespace sidon
