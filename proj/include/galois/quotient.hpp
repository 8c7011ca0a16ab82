#ifndef GALOIS_QUOTIENT_HPP
#define GALOIS_QUOTIENT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "galois/polynomial.hpp"

namespace galois {

// Forward declaration; defined below for finite base fields.
template <class B>
bool is_irreducible_over(const B& base, const Poly<B>& f);

/// The quotient ring B[x]/<m> for a field B and monic modulus m.
/// A field exactly when m is irreducible over B. Elements are the
/// canonical coset representatives: polynomials of degree < deg m.
/// Towers arise by taking B itself to be a QuotientRing.
template <class B>
class QuotientRing {
 public:
  using Elem = Poly<B>;
  static constexpr bool finite = B::finite;
  static constexpr int tower_height = B::tower_height + 1;

  /// `check_irreducible` verifies irreducibility of the modulus by trial
  /// division (finite base fields only); pass false for ring mode or
  /// when irreducibility is established elsewhere.
  QuotientRing(B base, Poly<B> modulus, bool field, bool check_irreducible = false)
      : base_(std::move(base)), modulus_(std::move(modulus)), field_(field) {
    if (modulus_.degree() < 1)
      throw std::invalid_argument("QuotientRing: modulus must be nonconstant");
    if (!base_.eq(poly_lc(base_, modulus_), base_.one()))
      throw std::invalid_argument("QuotientRing: modulus must be monic");
    if (check_irreducible) {
      if constexpr (B::finite) {
        if (field_ && !is_irreducible_over(base_, modulus_))
          throw std::invalid_argument("QuotientRing: modulus is reducible over the base");
      }
    }
  }

  const B& base() const { return base_; }
  const Poly<B>& modulus() const { return modulus_; }
  int extension_degree() const { return modulus_.degree(); }
  bool is_field() const { return field_; }

  std::int64_t size() const {
    static_assert(B::finite || sizeof(B) == 0, "size(): infinite domain");
    std::int64_t s = 1;
    for (int i = 0; i < extension_degree(); ++i) s *= base_.size();
    return s;
  }

  /// Enumerates elements as base-|B| numerals over the coefficients,
  /// least significant digit = constant term; nth(0) = 0, nth(1) = 1.
  Elem nth(std::int64_t i) const {
    std::vector<typename B::Elem> c;
    std::int64_t q = base_.size();
    for (int k = 0; k < extension_degree() && i > 0; ++k) {
      c.push_back(base_.nth(i % q));
      i /= q;
    }
    return poly_trim(base_, std::move(c));
  }

  /// The coset of x: the adjoined root of the modulus.
  Elem generator() const { return reduce(poly_x(base_)); }

  Elem zero() const { return Elem{}; }
  Elem one() const { return poly_one(base_); }
  Elem from_int(long k) const { return poly_constant(base_, base_.from_int(k)); }
  Elem from_bigint(const BigInt& z) const { return poly_constant(base_, base_.from_bigint(z)); }
  Elem embed(typename B::Elem e) const { return poly_constant(base_, std::move(e)); }

  Elem add(const Elem& a, const Elem& b) const { return poly_add(base_, a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return poly_sub(base_, a, b); }
  Elem neg(const Elem& a) const { return poly_neg(base_, a); }
  Elem mul(const Elem& a, const Elem& b) const {
    return poly_rem(base_, poly_mul(base_, a, b), modulus_);
  }
  Elem reduce(const Elem& a) const { return poly_rem(base_, a, modulus_); }

  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return poly_eq(base_, a, b); }

  bool invertible(const Elem& a) const {
    if (a.is_zero()) return false;
    return poly_gcd(base_, a, modulus_).degree() == 0;
  }

  /// Inverse of the coset a + <m> via the Bezout identity u a + v m = 1.
  Elem inv(const Elem& a) const {
    if (a.is_zero()) throw std::domain_error("QuotientRing: division by zero");
    auto bez = poly_gcd_bezout(base_, a, modulus_);
    if (bez.gcd.degree() != 0)
      throw std::domain_error("QuotientRing: element is not a unit");
    return reduce(bez.a);
  }

  Elem pow(const Elem& a, BigInt e) const {
    return poly_pow_mod(base_, a, std::move(e), modulus_);
  }

  /// Levels of a tower print with distinct variables: a, then b, c, ...
  std::string str(const Elem& a) const {
    return element_to_string(a, std::string(1, static_cast<char>('a' + tower_height - 1)));
  }

  std::string element_to_string(const Elem& a, const std::string& var) const;

 private:
  B base_;
  Poly<B> modulus_;
  bool field_;
};

using Fp = IntegersMod;
using FpPoly = Poly<Fp>;
using FpExt = QuotientRing<Fp>;          // F_{p^d}
using FpTower = QuotientRing<FpExt>;     // e.g. F_729 over F_9

inline FpExt make_finite_field(std::int64_t p, FpPoly modulus) {
  return FpExt(Fp::prime_field(p), std::move(modulus), /*field=*/true,
               /*check_irreducible=*/true);
}

// ---- irreducibility and factorization over finite fields ----

namespace detail {
// Enumerates the i-th monic polynomial of degree d over the finite
// field `base` (coefficients as base-|B| digits, constant term least
// significant).
template <class B>
Poly<B> nth_monic(const B& base, int d, std::int64_t i) {
  std::vector<typename B::Elem> c(static_cast<size_t>(d) + 1, base.zero());
  std::int64_t q = base.size();
  for (int k = 0; k < d; ++k) {
    c[static_cast<size_t>(k)] = base.nth(i % q);
    i /= q;
  }
  c[static_cast<size_t>(d)] = base.one();
  return poly_trim(base, std::move(c));
}

template <class B>
std::int64_t pow_checked(std::int64_t b, int e, std::int64_t cap) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
    if (r > cap) return cap + 1;
  }
  return r;
}
}  // namespace detail

/// Monic f of degree >= 1 over a finite field is irreducible iff no
/// monic polynomial of degree 1..deg/2 divides it. Degree <= 3 reduces
/// to a root search. Enumeration is guarded at |B|^{ceil(deg/2)} <= 1e7.
template <class B>
bool is_irreducible_over(const B& base, const Poly<B>& f) {
  int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  // root search covers all degree-1 factors; decides n <= 3 outright
  for (std::int64_t i = 0; i < base.size(); ++i) {
    if (base.is_zero(poly_evaluate(base, f, base.nth(i)))) return false;
  }
  if (n <= 3) return true;
  int half = n / 2;
  if (detail::pow_checked<B>(base.size(), half, 10'000'000) > 10'000'000)
    throw std::domain_error("is_irreducible_over: search space exceeds bound");
  for (int d = 2; d <= half; ++d) {
    std::int64_t count = 1;
    for (int k = 0; k < d; ++k) count *= base.size();
    for (std::int64_t i = 0; i < count; ++i) {
      if (poly_divides(base, detail::nth_monic(base, d, i), f)) return false;
    }
  }
  return true;
}

/// Smallest (in the enumeration order of coefficients) monic irreducible
/// polynomial of degree d over a finite field.
template <class B>
Poly<B> find_irreducible(const B& base, int d) {
  if (d < 1) throw std::invalid_argument("find_irreducible: degree must be >= 1");
  if (d == 1) return poly_x(base);
  std::int64_t count = detail::pow_checked<B>(base.size(), d, 100'000'000);
  for (std::int64_t i = 0; i < count; ++i) {
    auto cand = detail::nth_monic(base, d, i);
    if (is_irreducible_over(base, cand)) return cand;
  }
  throw std::logic_error("find_irreducible: no irreducible polynomial found");
}

/// Brute-force factorization over a finite field into monic irreducible
/// factors with multiplicities, by trial division in increasing degree
/// (divisors of minimal degree are automatically irreducible).
/// Factors are returned sorted; lc(f) times their product equals f.
template <class B>
std::vector<std::pair<Poly<B>, int>> factor_over(const B& base, Poly<B> f) {
  if (f.is_zero()) throw std::domain_error("factor_over: zero polynomial");
  if (detail::pow_checked<B>(base.size(), (f.degree() + 1) / 2, 10'000'000) > 10'000'000)
    throw std::domain_error("factor_over: search space exceeds bound");
  std::vector<std::pair<Poly<B>, int>> out;
  f = poly_monic(base, f);
  for (int d = 1; f.degree() >= 1 && d <= f.degree() / 2; ++d) {
    std::int64_t count = 1;
    for (int k = 0; k < d; ++k) count *= base.size();
    for (std::int64_t i = 0; i < count && f.degree() > d; ++i) {
      auto cand = detail::nth_monic(base, d, i);
      int mult = 0;
      for (;;) {
        auto qr = poly_divmod(base, f, cand);
        if (!qr.remainder.is_zero()) break;
        f = qr.quotient;
        ++mult;
      }
      if (mult > 0) out.emplace_back(cand, mult);
    }
  }
  if (f.degree() >= 1) out.emplace_back(f, 1);  // what is left is irreducible
  return out;
}

/// Element of multiplicative order q-1 in a finite field of order q.
/// Deterministic: elements are tested in enumeration order; the order
/// check only needs a^{(q-1)/p} for primes p | q-1.
template <class F>
typename F::Elem multiplicative_generator(const F& field) {
  std::int64_t q = field.size();
  if (q > 1'000'000) throw std::domain_error("multiplicative_generator: field too large");
  std::int64_t m = q - 1;
  std::vector<std::int64_t> prime_divisors;
  std::int64_t t = m;
  for (std::int64_t p = 2; p * p <= t; ++p) {
    if (t % p == 0) {
      prime_divisors.push_back(p);
      while (t % p == 0) t /= p;
    }
  }
  if (t > 1) prime_divisors.push_back(t);
  for (std::int64_t i = 1; i < q; ++i) {
    auto a = field.nth(i);
    bool primitive = true;
    for (std::int64_t p : prime_divisors) {
      if (field.eq(field.pow(a, BigInt(static_cast<long>(m / p))), field.one())) {
        primitive = false;
        break;
      }
    }
    if (primitive) return a;
  }
  throw std::logic_error("multiplicative_generator: none found");
}

/// Checks that the field of order q is the root set of x^q - x: every
/// element satisfies a^q = a, and x^q - x is squarefree (its derivative
/// is the constant -1).
template <class F>
bool verify_xq_minus_x(const F& field) {
  std::int64_t q = field.size();
  if (q > 4096) throw std::domain_error("verify_xq_minus_x: field too large");
  for (std::int64_t i = 0; i < q; ++i) {
    auto a = field.nth(i);
    if (!field.eq(field.pow(a, BigInt(static_cast<long>(q))), a)) return false;
  }
  // x^q - x over the field; squarefree iff gcd with derivative is constant
  std::vector<typename F::Elem> c(static_cast<size_t>(q) + 1, field.zero());
  c[1] = field.neg(field.one());
  c[static_cast<size_t>(q)] = field.one();
  Poly<F> xq_minus_x = poly_trim(field, std::move(c));
  auto deriv = poly_derivative(field, xq_minus_x);
  if (deriv.is_zero()) return false;
  return poly_gcd(field, xq_minus_x, deriv).degree() == 0;
}

/// Complete q x q multiplication table in enumeration order. Works for
/// quotient rings and for Z_n in ring mode (the Z_4 non-field contrast).
template <class F>
std::vector<std::vector<typename F::Elem>> multiplication_table(const F& ring) {
  std::int64_t q = ring.size();
  if (q > 4096) throw std::domain_error("multiplication_table: ring too large");
  std::vector<std::vector<typename F::Elem>> table;
  table.reserve(static_cast<size_t>(q));
  for (std::int64_t i = 0; i < q; ++i) {
    std::vector<typename F::Elem> row;
    row.reserve(static_cast<size_t>(q));
    for (std::int64_t j = 0; j < q; ++j) row.push_back(ring.mul(ring.nth(i), ring.nth(j)));
    table.push_back(std::move(row));
  }
  return table;
}

template <class B>
std::string QuotientRing<B>::element_to_string(const Elem& a, const std::string& var) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.degree(); i >= 0; --i) {
    const auto& c = a.coeffs[static_cast<size_t>(i)];
    if (base_.is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    std::string cs = base_.str(c);
    // compound coefficients (tower elements) need parentheses
    if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
    if (i == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace galois

#endif  // GALOIS_QUOTIENT_HPP
