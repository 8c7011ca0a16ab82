#ifndef GALOIS_DOMAINS_HPP
#define GALOIS_DOMAINS_HPP

#include <cstdint>
#include <numeric>
#include <utility>
#include <stdexcept>
#include <string>

#include "galois/rational.hpp"

namespace galois {

// A coefficient domain is a value type D with:
//   using Elem = ...;
//   Elem zero(), one(), from_int(long);
//   Elem add/sub/mul(a, b), neg(a);
//   bool is_zero(a), eq(a, b);
//   bool is_field();  bool invertible(a);  Elem inv(a);
//   std::string str(a);
// Finite domains additionally have size() and nth(i) enumerating all
// elements, with nth(0) == zero().

/// The field of rational numbers.
struct Rationals {
  using Elem = Rational;
  static constexpr bool finite = false;
  static constexpr int tower_height = 0;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_int(long k) const { return Rational(k); }
  Elem from_bigint(const BigInt& z) const { return Rational(z); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_field() const { return true; }
  bool invertible(const Elem& a) const { return !a.is_zero(); }
  Elem inv(const Elem& a) const { return a.inverse(); }
  std::string str(const Elem& a) const { return a.str(); }
};

/// The ring Z_n of integers mod n; a field exactly when n is prime.
/// Non-prime moduli are supported as plain rings (Z_4, Z_6 style);
/// inverse requests for non-units are refused.
class IntegersMod {
 public:
  using Elem = std::int64_t;  // representative in [0, n)
  static constexpr bool finite = true;
  static constexpr int tower_height = 0;

  explicit IntegersMod(std::int64_t n) : n_(n), prime_(galois::is_prime(n)) {
    if (n < 2) throw std::invalid_argument("IntegersMod: modulus must be >= 2");
  }

  /// Constructs F_p, rejecting composite moduli.
  static IntegersMod prime_field(std::int64_t p) {
    IntegersMod d(p);
    if (!d.prime_) throw std::invalid_argument("prime_field: modulus is not prime");
    return d;
  }

  std::int64_t modulus() const { return n_; }
  std::int64_t size() const { return n_; }
  Elem nth(std::int64_t i) const { return i; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % n_; }
  Elem from_int(long k) const {
    Elem r = k % n_;
    return r < 0 ? r + n_ : r;
  }
  Elem from_bigint(const BigInt& z) const {
    BigInt r = z % static_cast<long>(n_);
    if (r < 0) r += static_cast<long>(n_);
    return r.get_si();
  }
  Elem add(Elem a, Elem b) const { return (a + b) % n_; }
  Elem sub(Elem a, Elem b) const { return (a - b + n_) % n_; }
  Elem neg(Elem a) const { return (n_ - a) % n_; }
  Elem mul(Elem a, Elem b) const { return (a * b) % n_; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool is_field() const { return prime_; }
  bool invertible(Elem a) const { return std::gcd(a, n_) == 1; }

  Elem inv(Elem a) const {
    if (!invertible(a)) throw std::domain_error("IntegersMod: element is not a unit");
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = n_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return from_int(t);
  }

  Elem pow(Elem a, BigInt e) const {
    if (e < 0) throw std::domain_error("IntegersMod: negative exponent");
    Elem r = one(), b = a;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }

  std::string str(Elem a) const { return std::to_string(a); }

  bool operator==(const IntegersMod& o) const { return n_ == o.n_; }

 private:
  std::int64_t n_;
  bool prime_;
};

}  // namespace galois

#endif  // GALOIS_DOMAINS_HPP
