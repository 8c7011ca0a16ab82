#ifndef GALOIS_IRREDUCIBILITY_HPP
#define GALOIS_IRREDUCIBILITY_HPP

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "galois/polynomial.hpp"

namespace galois {

enum class Verdict { Irreducible, Reducible, Unknown };

struct EisensteinWitness {
  long p;
  long shift;  // f(x + shift) satisfies Eisenstein at p
};
struct ReductionWitness {
  long p;  // f mod p is irreducible with degree preserved
};
struct RationalRootWitness {
  Rational root;
};
struct FactorPairWitness {
  QPoly g, h;  // g * h = content-normalized input
};
struct ExhaustedWitness {};  // all certification routes exhausted

using IrrWitness = std::variant<EisensteinWitness, ReductionWitness, RationalRootWitness,
                                FactorPairWitness, ExhaustedWitness>;

struct IrreducibilityCertificate {
  Verdict verdict;
  IrrWitness witness;
};

/// Primitive integer form of a rational polynomial: denominators
/// cleared, content removed, leading coefficient positive.
std::vector<BigInt> primitive_integer_coeffs(const QPoly& f);

/// All rational roots, by the divisor-pair test on the primitive
/// integer form; sorted ascending.
std::vector<Rational> rational_roots(const QPoly& f);

/// Searches shifts a = 0, 1, -1, 2, -2, ... up to |a| <= max_shift for
/// a prime p such that f(x + a) satisfies Eisenstein's criterion at p:
/// p divides every non-leading coefficient, p does not divide the
/// leading one, p^2 does not divide the constant term. Success proves
/// irreducibility over Q.
std::optional<EisensteinWitness> eisenstein(const std::vector<BigInt>& coeffs,
                                            long max_shift = 10);

/// Degree partition of f mod p (distinct-degree factorization), sorted
/// descending. Empty optional when p is inadmissible: p divides the
/// leading coefficient or f mod p has repeated factors. For admissible
/// p the partition is a cycle type of the Galois group (Dedekind).
std::optional<std::vector<int>> cycle_type(const std::vector<BigInt>& coeffs, long p);

/// First prime in the list preserving the degree of f and with f mod p
/// irreducible over F_p (Rabin's distinct-degree test).
std::optional<long> reduction_test(const std::vector<BigInt>& coeffs,
                                   const std::vector<long>& primes);

/// Irreducibility over Q with a certificate. Decides every input of
/// degree <= 5 (rational roots, Eisenstein with shifts, reduction mod
/// p <= 97, then an exhaustive bounded quadratic-factor search); for
/// higher degrees the fast paths may leave Unknown.
IrreducibilityCertificate is_irreducible_q(const QPoly& f);

/// Complete factorization over Q into monic irreducible factors with
/// multiplicities (plus the leading rational content as a scalar).
/// Throws when a factor of degree > 5 cannot be certified.
struct QFactorization {
  Rational unit;  // f = unit * prod factor^mult with all factors monic
  std::vector<std::pair<QPoly, int>> factors;
};
QFactorization factor_q(const QPoly& f);

}  // namespace galois

#endif  // GALOIS_IRREDUCIBILITY_HPP
