#ifndef GALOIS_NUMFIELD_HPP
#define GALOIS_NUMFIELD_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "galois/matrix.hpp"
#include "galois/polynomial.hpp"
#include "galois/quotient.hpp"

namespace galois {

/// A number field presented as Q[x]/<f> with f monic irreducible.
using NumberField = QuotientRing<Rationals>;

/// Q(alpha)[y]/<g>: the two-generator extension Q(alpha, beta) on the
/// basis alpha^i beta^j, as long as g stays irreducible over Q(alpha).
/// Built in ring mode; the tensor condition is certified indirectly by
/// primitive_element (the degree of a primitive element must be the
/// product of the step degrees).
using TensorField = QuotientRing<NumberField>;

// ---- coordinates of elements over the bottom field Q ----

inline int q_dimension(const Rationals&) { return 1; }

template <class B>
int q_dimension(const QuotientRing<B>& f) {
  return f.extension_degree() * q_dimension(f.base());
}

inline void q_coordinates(const Rationals&, const Rational& e, std::vector<Rational>& out) {
  out.push_back(e);
}

template <class B>
void q_coordinates(const QuotientRing<B>& f, const typename QuotientRing<B>::Elem& e,
                   std::vector<Rational>& out) {
  for (int i = 0; i < f.extension_degree(); ++i)
    q_coordinates(f.base(), poly_coeff(f.base(), e, i), out);
}

inline Rational embed_rational(const Rationals&, const Rational& r) { return r; }

template <class B>
typename QuotientRing<B>::Elem embed_rational(const QuotientRing<B>& f, const Rational& r) {
  return f.embed(embed_rational(f.base(), r));
}

/// Evaluates a polynomial over D at a point of an extension E of D,
/// embedding coefficients with E::embed.
template <class E, class D>
typename E::Elem evaluate_in_extension(const E& ext, const Poly<D>& f,
                                       const typename E::Elem& c) {
  auto acc = ext.zero();
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
    acc = ext.add(ext.mul(acc, c), ext.embed(*it));
  return acc;
}

/// Evaluates a rational polynomial at a point of any Q-algebra built as
/// a quotient-ring tower over Q.
template <class A>
typename A::Elem evaluate_q_poly(const A& field, const QPoly& f, const typename A::Elem& c) {
  auto acc = field.zero();
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
    acc = field.add(field.mul(acc, c), embed_rational(field, *it));
  return acc;
}

/// Minimum polynomial of an element of a finite-dimensional Q-algebra
/// (number field or tensor field): write the coordinate vectors of
/// 1, e, e^2, ... on the Q-basis and stop at the first power that is
/// linearly dependent on the earlier ones; the kernel of that
/// coordinate matrix gives the monic minimum polynomial.
template <class A>
QPoly min_poly_of_element(const A& field, const typename A::Elem& e) {
  const Rationals q;
  const int n = q_dimension(field);
  if (n > 24) throw std::domain_error("min_poly_of_element: ambient degree too large");
  std::vector<std::vector<Rational>> power_coords;
  auto pw = field.one();
  for (int k = 0;; ++k) {
    std::vector<Rational> col;
    q_coordinates(field, pw, col);
    power_coords.push_back(std::move(col));
    QMatrix m(static_cast<std::size_t>(n), power_coords.size());
    for (std::size_t j = 0; j < power_coords.size(); ++j)
      for (int r = 0; r < n; ++r)
        m.at(static_cast<std::size_t>(r), j) = power_coords[j][static_cast<std::size_t>(r)];
    auto ker = kernel(m);
    if (!ker.empty()) {
      // columns 0..k-1 are independent, so the kernel is spanned by one
      // vector whose last coordinate is 1: the monic minimum polynomial
      auto mp = poly_trim(q, ker.front());
      auto check = evaluate_q_poly(field, mp, e);
      if (!field.is_zero(check))
        throw std::logic_error("min_poly_of_element: candidate does not vanish");
      return mp;
    }
    if (k > n) throw std::logic_error("min_poly_of_element: no relation found");
    pw = field.mul(pw, e);
  }
}

struct PrimitiveElement {
  long c;                        // smallest c >= 0 with theta = alpha + c beta primitive
  TensorField::Elem theta;
  QPoly min_poly;
};

/// Primitive element of Q(alpha, beta): the smallest nonnegative
/// integer c such that alpha + c beta generates the whole field, i.e.
/// its minimum polynomial has degree deg(f) * deg(g). Failure for all
/// c <= 100 means the tensor condition does not hold.
inline PrimitiveElement primitive_element(const TensorField& field) {
  const int n = q_dimension(field);
  auto alpha = field.embed(field.base().generator());
  auto beta = field.generator();
  for (long c = 0; c <= 100; ++c) {
    auto theta = field.add(alpha, field.mul(field.from_int(c), beta));
    auto mp = min_poly_of_element(field, theta);
    if (mp.degree() == n) return {c, theta, mp};
  }
  throw std::domain_error("primitive_element: no c <= 100 works; tensor condition fails");
}

/// The Tower Law: the degree of a chain of extensions is the product of
/// the step degrees.
inline long tower_degree(const std::vector<int>& step_degrees) {
  long total = 1;
  for (int d : step_degrees) {
    if (d < 1) throw std::invalid_argument("tower_degree: step degree must be >= 1");
    total *= d;
  }
  return total;
}

/// Kronecker's construction over a prime field: an extension of F_p
/// containing a root of f, built as F_p[x]/<g> for an irreducible
/// factor g of f; the coset of x is the root.
struct FpExtension {
  FpExt field;
  FpExt::Elem root;
};

/// Number-field maker: checks that the modulus is monic and certified
/// irreducible over Q. Defined with the irreducibility machinery.
NumberField make_number_field(QPoly modulus);

/// Tensor-field maker over moduli f (for alpha) and g (for beta), both
/// monic irreducible over Q; the tensor condition itself is certified
/// lazily by primitive_element.
TensorField make_tensor_field(QPoly f, QPoly g);

struct QExtension {
  NumberField field;
  NumberField::Elem root;
};

/// Kronecker's construction over Q for deg f <= 5 (where factorization
/// is certified): a number field containing a root of f.
QExtension kronecker_extend(const Rationals& base, const QPoly& f);

inline FpExtension kronecker_extend(const Fp& base, const FpPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("kronecker_extend: f must be nonconstant");
  auto factors = factor_over(base, f);
  const FpPoly& g = factors.front().first;
  FpExt ext(base, g, /*field=*/true);
  auto root = ext.generator();
  if (!ext.is_zero(evaluate_in_extension(ext, f, root)))
    throw std::logic_error("kronecker_extend: root does not vanish");
  return {std::move(ext), std::move(root)};
}

}  // namespace galois

#endif  // GALOIS_NUMFIELD_HPP
