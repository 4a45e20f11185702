#pragma once

// Seeded random instances shared by the verification suites and benchmarks.

#include <cstddef>
#include <cstdint>

#include "sidon/chaos.hpp"
#include "sidon/poly.hpp"
#include "sidon/rng.hpp"

namespace sidon {

/// m-homogeneous polynomial in n variables with complex Gaussian
/// coefficients on at most max_terms randomly chosen monomials (all of
/// them when the space is small enough).
HomPoly random_hom_poly(int n, int m, CounterRng& rng, std::size_t max_terms = 64);

/// Polynomial of degree <= degree with parts 0..degree drawn as above.
GeneralPoly random_general_poly(int n, int degree, CounterRng& rng, std::size_t max_terms = 64);

/// Order-m chaos in n signs with complex Gaussian coefficients on at most
/// max_terms random increasing tuples.
ChaosVector random_chaos(int n, int m, CounterRng& rng, std::size_t max_terms = 64);

/// A point of the closed polydisc, |z_j| <= 1.
std::vector<Complex> random_polydisc_point(int n, CounterRng& rng);

}  // namespace sidon
