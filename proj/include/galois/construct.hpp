#ifndef GALOIS_CONSTRUCT_HPP
#define GALOIS_CONSTRUCT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "galois/polynomial.hpp"

namespace galois {

enum class ConstructAnswer { Yes, No, NecessaryConditionHolds, NecessaryConditionFails };

std::string construct_answer_name(ConstructAnswer a);

/// Decision with its witness: for n-gons the factorization n = 2^k p1...pm,
/// for numbers the minimum-polynomial degree.
struct ConstructibilityVerdict {
  ConstructAnswer answer;
  std::string reason;
  long power_of_two = 0;               // k in n = 2^k * odd part
  std::vector<long> fermat_primes;     // distinct Fermat prime factors found
  long degree = 0;                     // minimum-polynomial degree, when relevant
};

/// A Fermat prime is a prime of the form 2^{2^t} + 1.
bool is_fermat_prime(std::int64_t p);

/// The regular n-gon (n >= 3) is constructible exactly when
/// n = 2^k * p1 * ... * pm with the p_i distinct Fermat primes.
ConstructibilityVerdict ngon_constructible(std::int64_t n);

/// The angle pi/n is constructible exactly when the regular 2n-gon is.
ConstructibilityVerdict angle_pi_over_n_constructible(std::int64_t n);

/// Necessary condition for a number with the given minimum polynomial:
/// the degree must be a power of two. Never answers an outright Yes
/// (the converse fails). The polynomial form checks irreducibility
/// first and rejects reducible input.
ConstructibilityVerdict number_necessary_test(long minpoly_degree);
ConstructibilityVerdict number_necessary_test(const QPoly& min_poly);

enum class PlatonicSolid { Octahedron, Dodecahedron, Icosahedron };

/// Doubling the volume of a platonic solid scales edges by the cube
/// root of 2, so the necessary test fails for all of them.
ConstructibilityVerdict platonic_doubling(PlatonicSolid solid);

}  // namespace galois

#endif  // GALOIS_CONSTRUCT_HPP
