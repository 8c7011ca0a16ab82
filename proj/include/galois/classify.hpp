#ifndef GALOIS_CLASSIFY_HPP
#define GALOIS_CLASSIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "galois/irreducibility.hpp"
#include "galois/polynomial.hpp"

namespace galois {

enum class GroupLabel {
  Trivial, C2, C3, S3, C4, V4, D4, A4, S4, C5, D5, F20, A5, S5,
  Reducible, Unknown
};

std::string label_name(GroupLabel label);

/// Classified Galois group of a polynomial of degree <= 5 over Q.
/// `order` is the group order (= splitting field degree); 0 for
/// Reducible/Unknown, where it is not tracked. Solvability is the
/// static fact: exactly A5 and S5 are insoluble among these.
struct GaloisClass {
  GroupLabel label = GroupLabel::Unknown;
  long order = 0;
  bool solvable = true;
  std::vector<int> factor_degrees;   // Reducible: degrees of the irreducible factors
  std::vector<GroupLabel> candidates;  // Unknown: what sampling could not separate
};

struct CycleTypeSample {
  long p;
  std::vector<int> partition;  // factor degrees of f mod p, descending
};

/// Cycle types of Frobenius elements: degree partitions of f mod p for
/// the first `max_primes` admissible primes, ascending in p.
std::vector<CycleTypeSample> cycle_type_samples(const QPoly& f, int max_primes);

/// Quadratic rule: Trivial when the roots are rational, else C2.
GaloisClass galois_group_quadratic(const QPoly& f);

/// Cubic rule via the discriminant: reducible cases from the factor
/// shape; irreducible cubics are C3 when disc is a rational square,
/// S3 otherwise.
GaloisClass galois_group_cubic(const QPoly& f);

/// Full classifier for squarefree f of degree 1..5. Degrees 4 and 5
/// use the rational-square discriminant test plus Dedekind cycle-type
/// sampling over at most `max_primes` admissible primes.
GaloisClass galois_group(const QPoly& f, int max_primes = 200);

/// Degree of the splitting field = order of the Galois group. Also
/// handles cyclotomic polynomials Phi_p of any degree (group cyclic of
/// order p-1).
long splitting_degree(const QPoly& f, int max_primes = 200);

/// Theorem: solvable by radicals iff the Galois group is soluble.
/// Reducible inputs take the conjunction over irreducible factors.
/// Throws when classification returns Unknown.
bool is_solvable_by_radicals(const QPoly& f, int max_primes = 200);

/// Classification grid for x^5 + a x + b over -R <= a, b <= R.
struct QuinticMap {
  int range;
  std::vector<GroupLabel> cells;  // row-major, index = (b + R) * (2R+1) + (a + R)
  std::map<std::string, long> histogram;

  GroupLabel at(int a, int b) const {
    return cells[static_cast<size_t>((b + range) * (2 * range + 1) + (a + range))];
  }
};

QuinticMap quintic_map(int range, int max_primes = 200);

}  // namespace galois

#endif  // GALOIS_CLASSIFY_HPP
