#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sidon {

using BigInt = boost::multiprecision::cpp_int;

/// Default cap on explicitly enumerated multi-indices.
inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

/// Exponent vector alpha of a monomial z^alpha.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);
  MultiIndex(std::initializer_list<int> exponents)
      : MultiIndex(std::vector<int>(exponents)) {}

  int size() const { return static_cast<int>(exponents_.size()); }
  int degree() const { return degree_; }
  int operator[](int j) const { return exponents_[static_cast<std::size_t>(j)]; }
  int max_exponent() const;
  /// True when every exponent is 0 or 1.
  bool is_tetrahedral() const { return max_exponent() <= 1; }
  const std::vector<int>& exponents() const { return exponents_; }

  bool operator==(const MultiIndex&) const = default;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

/// Canonical monomial order: graded, then lexicographically decreasing, so
/// for n = 2, m = 2 the order is (2,0), (1,1), (0,2).
struct MonomialOrder {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// A word beta = (beta_1, ..., beta_m) of 1-based variable indices.
class IndexWord {
 public:
  IndexWord() = default;
  explicit IndexWord(std::vector<int> letters) : letters_(std::move(letters)) {}
  IndexWord(std::initializer_list<int> letters) : letters_(letters) {}

  int size() const { return static_cast<int>(letters_.size()); }
  int operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& letters() const { return letters_; }

  /// Sorted nondecreasing copy.
  IndexWord canonical() const;
  /// Letters pairwise distinct.
  bool is_tetrahedral() const;
  /// alpha_j = number of letters equal to j (1-based). Throws
  /// DimensionError for letters outside 1..n.
  MultiIndex profile(int n) const;

  bool operator==(const IndexWord&) const = default;

 private:
  std::vector<int> letters_;
};

/// All alpha with |alpha| = m in n variables, in MonomialOrder.
/// Throws CapacityError when C(n+m-1, m) exceeds `cap`.
std::vector<MultiIndex> enum_multi_indices(int n, int m,
                                           std::size_t cap = kDefaultEnumerationCap);

/// Number of distinct words realizing alpha: m! / prod_j alpha_j!.
/// Exact; throws OverflowError past 2^64 - 1.
std::uint64_t word_count(const MultiIndex& alpha);

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);

/// Smallest double >= x.
double to_double_up(const BigInt& x);
/// Largest double <= x.
double to_double_down(const BigInt& x);

/// Primes p <= x in increasing order (sieve of Eratosthenes).
std::vector<std::uint32_t> primes_upto(double x);
/// Prime counting function.
std::size_t prime_count(double x);

}  // namespace sidon
