#ifndef GALOIS_POLYNOMIAL_HPP
#define GALOIS_POLYNOMIAL_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galois/domains.hpp"
#include "galois/rational.hpp"

namespace galois {

/// Dense univariate polynomial over a coefficient domain D.
/// coeffs[i] is the coefficient of x^i; no trailing zero coefficients
/// (the zero polynomial has an empty coefficient list).
template <class D>
struct Poly {
  std::vector<typename D::Elem> coeffs;

  /// Degree; -1 stands in for deg(0) = minus infinity.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
};

constexpr int kDegZero = -1;  // degree of the zero polynomial

template <class D>
Poly<D> poly_trim(const D& dom, std::vector<typename D::Elem> c) {
  while (!c.empty() && dom.is_zero(c.back())) c.pop_back();
  return Poly<D>{std::move(c)};
}

template <class D>
Poly<D> poly_zero(const D&) {
  return Poly<D>{};
}

template <class D>
Poly<D> poly_constant(const D& dom, typename D::Elem e) {
  if (dom.is_zero(e)) return Poly<D>{};
  return Poly<D>{{std::move(e)}};
}

template <class D>
Poly<D> poly_one(const D& dom) {
  return poly_constant(dom, dom.one());
}

/// The monomial x.
template <class D>
Poly<D> poly_x(const D& dom) {
  return Poly<D>{{dom.zero(), dom.one()}};
}

template <class D>
Poly<D> poly_from_ints(const D& dom, const std::vector<long>& c) {
  std::vector<typename D::Elem> e;
  e.reserve(c.size());
  for (long v : c) e.push_back(dom.from_int(v));
  return poly_trim(dom, std::move(e));
}

template <class D>
typename D::Elem poly_coeff(const D& dom, const Poly<D>& f, int i) {
  if (i < 0 || i >= static_cast<int>(f.coeffs.size())) return dom.zero();
  return f.coeffs[i];
}

template <class D>
typename D::Elem poly_lc(const D& dom, const Poly<D>& f) {
  if (f.is_zero()) return dom.zero();
  return f.coeffs.back();
}

template <class D>
bool poly_eq(const D& dom, const Poly<D>& f, const Poly<D>& g) {
  if (f.coeffs.size() != g.coeffs.size()) return false;
  for (size_t i = 0; i < f.coeffs.size(); ++i)
    if (!dom.eq(f.coeffs[i], g.coeffs[i])) return false;
  return true;
}

template <class D>
Poly<D> poly_add(const D& dom, const Poly<D>& f, const Poly<D>& g) {
  std::vector<typename D::Elem> c;
  size_t n = std::max(f.coeffs.size(), g.coeffs.size());
  c.reserve(n);
  for (size_t i = 0; i < n; ++i)
    c.push_back(dom.add(poly_coeff(dom, f, static_cast<int>(i)),
                        poly_coeff(dom, g, static_cast<int>(i))));
  return poly_trim(dom, std::move(c));
}

template <class D>
Poly<D> poly_neg(const D& dom, const Poly<D>& f) {
  std::vector<typename D::Elem> c;
  c.reserve(f.coeffs.size());
  for (const auto& a : f.coeffs) c.push_back(dom.neg(a));
  return Poly<D>{std::move(c)};
}

template <class D>
Poly<D> poly_sub(const D& dom, const Poly<D>& f, const Poly<D>& g) {
  return poly_add(dom, f, poly_neg(dom, g));
}

/// Product via the convolution c_k = sum_{i+j=k} a_i b_j. Over a ring
/// with zero divisors the degree may drop; trimming restores canonical
/// form.
template <class D>
Poly<D> poly_mul(const D& dom, const Poly<D>& f, const Poly<D>& g) {
  if (f.is_zero() || g.is_zero()) return Poly<D>{};
  std::vector<typename D::Elem> c(f.coeffs.size() + g.coeffs.size() - 1, dom.zero());
  for (size_t i = 0; i < f.coeffs.size(); ++i)
    for (size_t j = 0; j < g.coeffs.size(); ++j)
      c[i + j] = dom.add(c[i + j], dom.mul(f.coeffs[i], g.coeffs[j]));
  return poly_trim(dom, std::move(c));
}

template <class D>
Poly<D> poly_scale(const D& dom, const typename D::Elem& a, const Poly<D>& f) {
  std::vector<typename D::Elem> c;
  c.reserve(f.coeffs.size());
  for (const auto& e : f.coeffs) c.push_back(dom.mul(a, e));
  return poly_trim(dom, std::move(c));
}

template <class D>
struct PolyDivMod {
  Poly<D> quotient;
  Poly<D> remainder;
};

/// Long division f = q g + r with deg r < deg g. Requires g != 0 and
/// lc(g) invertible in the coefficient domain.
template <class D>
PolyDivMod<D> poly_divmod(const D& dom, const Poly<D>& f, const Poly<D>& g) {
  if (g.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
  if (!dom.invertible(poly_lc(dom, g)))
    throw std::domain_error("poly_divmod: leading coefficient of divisor is not invertible");
  auto lc_inv = dom.inv(poly_lc(dom, g));
  std::vector<typename D::Elem> r = f.coeffs;
  int dg = g.degree();
  int dq = static_cast<int>(r.size()) - 1 - dg;
  if (dq < 0) return {Poly<D>{}, f};
  std::vector<typename D::Elem> q(static_cast<size_t>(dq) + 1, dom.zero());
  for (int k = dq; k >= 0; --k) {
    auto& top = r[static_cast<size_t>(k + dg)];
    if (dom.is_zero(top)) continue;
    auto coef = dom.mul(top, lc_inv);
    q[static_cast<size_t>(k)] = coef;
    for (int i = 0; i <= dg; ++i) {
      auto& ri = r[static_cast<size_t>(k + i)];
      ri = dom.sub(ri, dom.mul(coef, g.coeffs[static_cast<size_t>(i)]));
    }
  }
  return {poly_trim(dom, std::move(q)), poly_trim(dom, std::move(r))};
}

template <class D>
Poly<D> poly_rem(const D& dom, const Poly<D>& f, const Poly<D>& g) {
  return poly_divmod(dom, f, g).remainder;
}

template <class D>
bool poly_divides(const D& dom, const Poly<D>& g, const Poly<D>& f) {
  return poly_rem(dom, f, g).is_zero();
}

template <class D>
Poly<D> poly_monic(const D& dom, const Poly<D>& f) {
  if (f.is_zero()) return f;
  return poly_scale(dom, dom.inv(poly_lc(dom, f)), f);
}

template <class D>
struct Bezout {
  Poly<D> gcd;  // monic
  Poly<D> a;    // gcd = a f + b g
  Poly<D> b;
};

/// Extended Euclid over a field: monic gcd d with d = a f + b g.
template <class D>
Bezout<D> poly_gcd_bezout(const D& dom, const Poly<D>& f, const Poly<D>& g) {
  if (f.is_zero() && g.is_zero())
    throw std::domain_error("poly_gcd_bezout: gcd(0, 0) is undefined");
  Poly<D> r0 = f, r1 = g;
  Poly<D> a0 = poly_one(dom), a1 = poly_zero(dom);
  Poly<D> b0 = poly_zero(dom), b1 = poly_one(dom);
  while (!r1.is_zero()) {
    auto qr = poly_divmod(dom, r0, r1);
    r0 = std::exchange(r1, qr.remainder);
    Poly<D> na = poly_sub(dom, a0, poly_mul(dom, qr.quotient, a1));
    a0 = std::exchange(a1, na);
    Poly<D> nb = poly_sub(dom, b0, poly_mul(dom, qr.quotient, b1));
    b0 = std::exchange(b1, nb);
  }
  auto lead_inv = dom.inv(poly_lc(dom, r0));
  return {poly_scale(dom, lead_inv, r0), poly_scale(dom, lead_inv, a0),
          poly_scale(dom, lead_inv, b0)};
}

template <class D>
Poly<D> poly_gcd(const D& dom, const Poly<D>& f, const Poly<D>& g) {
  return poly_gcd_bezout(dom, f, g).gcd;
}

/// Formal derivative sum k a_k x^{k-1}.
template <class D>
Poly<D> poly_derivative(const D& dom, const Poly<D>& f) {
  if (f.degree() < 1) return Poly<D>{};
  std::vector<typename D::Elem> c;
  c.reserve(f.coeffs.size() - 1);
  for (size_t k = 1; k < f.coeffs.size(); ++k)
    c.push_back(dom.mul(dom.from_int(static_cast<long>(k)), f.coeffs[k]));
  return poly_trim(dom, std::move(c));
}

/// A nonzero f over a field has no repeated roots in any extension
/// exactly when gcd(f, f') = 1.
template <class D>
bool poly_squarefree(const D& dom, const Poly<D>& f) {
  if (f.is_zero()) throw std::domain_error("poly_squarefree: zero polynomial");
  if (f.degree() == 0) return true;
  auto d = poly_derivative(dom, f);
  if (d.is_zero()) return false;  // only possible in characteristic p here
  return poly_gcd(dom, f, d).degree() == 0;
}

/// Evaluation at c (Horner); a ring homomorphism F[x] -> F.
template <class D>
typename D::Elem poly_evaluate(const D& dom, const Poly<D>& f, const typename D::Elem& c) {
  auto acc = dom.zero();
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
    acc = dom.add(dom.mul(acc, c), *it);
  return acc;
}

/// Applies a coefficient map sigma : C -> C' entrywise; the induced map
/// on polynomial rings. Degree may drop when sigma kills the leading
/// coefficient.
template <class D2, class D, class F>
Poly<D2> poly_map(const D2& target, const Poly<D>& f, F&& sigma) {
  std::vector<typename D2::Elem> c;
  c.reserve(f.coeffs.size());
  for (const auto& a : f.coeffs) c.push_back(sigma(a));
  return poly_trim(target, std::move(c));
}

/// f(x + a) via Horner in the polynomial ring.
template <class D>
Poly<D> poly_shift(const D& dom, const Poly<D>& f, const typename D::Elem& a) {
  Poly<D> xa{{a, dom.one()}};
  Poly<D> acc = poly_zero(dom);
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
    acc = poly_add(dom, poly_mul(dom, acc, xa), poly_constant(dom, *it));
  return acc;
}

/// Composition f(g(x)).
template <class D>
Poly<D> poly_compose(const D& dom, const Poly<D>& f, const Poly<D>& g) {
  Poly<D> acc = poly_zero(dom);
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
    acc = poly_add(dom, poly_mul(dom, acc, g), poly_constant(dom, *it));
  return acc;
}

/// base^e mod m (binary powering), over a field.
template <class D>
Poly<D> poly_pow_mod(const D& dom, Poly<D> base, BigInt e, const Poly<D>& m) {
  Poly<D> acc = poly_rem(dom, poly_one(dom), m);
  base = poly_rem(dom, base, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = poly_rem(dom, poly_mul(dom, acc, base), m);
    base = poly_rem(dom, poly_mul(dom, base, base), m);
    e >>= 1;
  }
  return acc;
}

// ---- operations specific to Q[x] ----

using QPoly = Poly<Rationals>;

/// Resultant of f and g via the Euclidean remainder sequence.
inline Rational resultant(const Rationals& dom, const QPoly& f, const QPoly& g) {
  if (f.is_zero() || g.is_zero()) return Rational(0);
  if (f.degree() == 0) {
    Rational r(1);
    for (int i = 0; i < g.degree(); ++i) r = r * f.coeffs[0];
    return r;
  }
  if (g.degree() == 0) {
    Rational r(1);
    for (int i = 0; i < f.degree(); ++i) r = r * g.coeffs[0];
    return r;
  }
  auto r = poly_rem(dom, f, g);
  Rational sign = (f.degree() * g.degree()) % 2 == 0 ? Rational(1) : Rational(-1);
  if (r.is_zero()) return Rational(0);
  Rational lead(1);
  int drop = f.degree() - r.degree();
  auto lg = poly_lc(dom, g);
  for (int i = 0; i < drop; ++i) lead = lead * lg;
  return sign * lead * resultant(dom, g, r);
}

/// disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f); equals the product of
/// squared root differences prod_{i<j} (a_i - a_j)^2 for monic f.
inline Rational discriminant(const Rationals& dom, const QPoly& f) {
  int n = f.degree();
  if (n < 1) throw std::domain_error("discriminant: constant polynomial");
  auto res = resultant(dom, f, poly_derivative(dom, f));
  Rational d = res / poly_lc(dom, f);
  if ((n * (n - 1) / 2) % 2 != 0) d = -d;
  return d;
}

/// The p-th cyclotomic polynomial x^{p-1} + ... + x + 1, p prime.
inline QPoly cyclotomic_p(long p) {
  if (!is_prime(p)) throw std::invalid_argument("cyclotomic_p: p must be prime");
  std::vector<Rational> c(static_cast<size_t>(p), Rational(1));
  return QPoly{std::move(c)};
}

std::string poly_to_string(const QPoly& f, const std::string& var = "x");

}  // namespace galois

#endif  // GALOIS_POLYNOMIAL_HPP
