#include "galois/construct.hpp"

#include <stdexcept>

#include "galois/irreducibility.hpp"

namespace galois {

namespace {
// Only five Fermat primes are known; no others exist below 2^32.
constexpr std::int64_t kKnownFermatPrimes[] = {3, 5, 17, 257, 65537};

bool power_of_two(std::int64_t n) { return n >= 1 && (n & (n - 1)) == 0; }
}  // namespace

std::string construct_answer_name(ConstructAnswer a) {
  switch (a) {
    case ConstructAnswer::Yes: return "yes";
    case ConstructAnswer::No: return "no";
    case ConstructAnswer::NecessaryConditionHolds: return "necessary-condition-holds";
    case ConstructAnswer::NecessaryConditionFails: return "necessary-condition-fails";
  }
  throw std::logic_error("construct_answer_name: bad answer");
}

bool is_fermat_prime(std::int64_t p) {
  if (p < 2) throw std::invalid_argument("is_fermat_prime: p must be >= 2");
  if (p <= (1LL << 33)) {
    // no unknown Fermat primes exist below 2^32 + 1
    for (std::int64_t k : kKnownFermatPrimes)
      if (p == k) return true;
    return false;
  }
  if (!power_of_two(p - 1)) return false;
  std::int64_t e = 0;
  for (std::int64_t m = p - 1; m > 1; m >>= 1) ++e;
  return power_of_two(e) && is_prime(p);
}

ConstructibilityVerdict ngon_constructible(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("ngon_constructible: need n >= 3");
  ConstructibilityVerdict v{};
  std::int64_t m = n;
  while (m % 2 == 0) {
    m /= 2;
    ++v.power_of_two;
  }
  std::int64_t odd = m;
  for (std::int64_t p : kKnownFermatPrimes) {
    if (m % p == 0) {
      m /= p;
      v.fermat_primes.push_back(p);
      if (m % p == 0) {
        // repeated Fermat prime (e.g. 9 = 3^2): not constructible
        v.answer = ConstructAnswer::No;
        v.reason = "odd part " + std::to_string(odd) + " repeats the Fermat prime " +
                   std::to_string(p);
        return v;
      }
    }
  }
  if (m != 1) {
    v.answer = ConstructAnswer::No;
    v.reason = "odd part has non-Fermat-prime factor " + std::to_string(m);
    return v;
  }
  v.answer = ConstructAnswer::Yes;
  v.reason = "n = 2^" + std::to_string(v.power_of_two) + " times distinct Fermat primes";
  return v;
}

ConstructibilityVerdict angle_pi_over_n_constructible(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("angle_pi_over_n_constructible: need n >= 1");
  if (n == 1) {
    // the straight angle pi comes for free
    return {ConstructAnswer::Yes, "pi is a straight angle", 1, {}, 0};
  }
  auto v = ngon_constructible(2 * n);
  v.reason = "angle pi/" + std::to_string(n) + " reduces to the regular " +
             std::to_string(2 * n) + "-gon: " + v.reason;
  return v;
}

ConstructibilityVerdict number_necessary_test(long minpoly_degree) {
  if (minpoly_degree < 1)
    throw std::invalid_argument("number_necessary_test: degree must be >= 1");
  ConstructibilityVerdict v{};
  v.degree = minpoly_degree;
  if (power_of_two(minpoly_degree)) {
    v.answer = ConstructAnswer::NecessaryConditionHolds;
    v.reason = "extension degree " + std::to_string(minpoly_degree) +
               " is a power of two (not sufficient on its own)";
  } else {
    v.answer = ConstructAnswer::NecessaryConditionFails;
    v.reason = "extension degree " + std::to_string(minpoly_degree) +
               " is not a power of two";
  }
  return v;
}

ConstructibilityVerdict number_necessary_test(const QPoly& min_poly) {
  auto cert = is_irreducible_q(min_poly);
  if (cert.verdict == Verdict::Reducible)
    throw std::invalid_argument("number_necessary_test: polynomial is reducible over Q");
  if (cert.verdict == Verdict::Unknown)
    throw std::domain_error("number_necessary_test: cannot certify irreducibility");
  return number_necessary_test(static_cast<long>(min_poly.degree()));
}

ConstructibilityVerdict platonic_doubling(PlatonicSolid) {
  // volume scales with the cube of the edge, so doubling needs the
  // cube root of 2 with minimum polynomial x^3 - 2
  Rationals q;
  auto v = number_necessary_test(poly_from_ints(q, {-2, 0, 0, 1}));
  v.reason = "edge must scale by 2^(1/3); " + v.reason;
  return v;
}

}  // namespace galois
