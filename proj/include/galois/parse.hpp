#ifndef GALOIS_PARSE_HPP
#define GALOIS_PARSE_HPP

#include <memory>
#include <stdexcept>
#include <string>

#include "galois/polynomial.hpp"

namespace galois {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " at byte " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

/// Parsed polynomial expression. Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := atom ('^' uint)?
///   atom   := rational | 'x' | 'y' | '(' expr ')'
/// Implicit multiplication is allowed between adjacent factors; the
/// Unicode minus sign is accepted. 'y' is only meaningful for
/// two-generator field elements.
struct Expr {
  enum class Kind { Num, VarX, VarY, Add, Sub, Mul, Pow, Neg } kind;
  Rational value;           // Num
  unsigned long exponent = 0;  // Pow
  std::unique_ptr<Expr> lhs, rhs;
};

std::unique_ptr<Expr> parse_expression(const std::string& text);

/// Evaluates an expression in any commutative ring with from_int, given
/// images for x (and optionally y).
template <class D>
typename D::Elem eval_expr(const D& dom, const Expr& e, const typename D::Elem& x,
                           const typename D::Elem* y = nullptr) {
  switch (e.kind) {
    case Expr::Kind::Num: {
      // num * den^{-1} inside the ring; requires den invertible there
      auto nn = dom.from_bigint(e.value.num());
      if (e.value.den() == 1) return nn;
      return dom.mul(nn, dom.inv(dom.from_bigint(e.value.den())));
    }
    case Expr::Kind::VarX:
      return x;
    case Expr::Kind::VarY:
      if (!y) throw std::domain_error("eval_expr: 'y' is not allowed in this context");
      return *y;
    case Expr::Kind::Add:
      return dom.add(eval_expr(dom, *e.lhs, x, y), eval_expr(dom, *e.rhs, x, y));
    case Expr::Kind::Sub:
      return dom.sub(eval_expr(dom, *e.lhs, x, y), eval_expr(dom, *e.rhs, x, y));
    case Expr::Kind::Mul:
      return dom.mul(eval_expr(dom, *e.lhs, x, y), eval_expr(dom, *e.rhs, x, y));
    case Expr::Kind::Neg:
      return dom.neg(eval_expr(dom, *e.lhs, x, y));
    case Expr::Kind::Pow: {
      auto base = eval_expr(dom, *e.lhs, x, y);
      auto acc = dom.one();
      for (unsigned long i = 0; i < e.exponent; ++i) acc = dom.mul(acc, base);
      return acc;
    }
  }
  throw std::logic_error("eval_expr: bad node");
}

/// Polynomial-ring domain wrapper so eval_expr can build a Poly<C>.
template <class C>
struct PolyRingOf {
  using Elem = Poly<C>;
  static constexpr bool finite = false;
  C coeff;
  Elem zero() const { return Elem{}; }
  Elem one() const { return poly_one(coeff); }
  Elem from_int(long k) const { return poly_constant(coeff, coeff.from_int(k)); }
  Elem from_bigint(const BigInt& z) const { return poly_constant(coeff, coeff.from_bigint(z)); }
  Elem add(const Elem& a, const Elem& b) const { return poly_add(coeff, a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return poly_sub(coeff, a, b); }
  Elem neg(const Elem& a) const { return poly_neg(coeff, a); }
  Elem mul(const Elem& a, const Elem& b) const { return poly_mul(coeff, a, b); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return poly_eq(coeff, a, b); }
  bool is_field() const { return false; }
  bool invertible(const Elem& a) const { return a.degree() == 0 && coeff.invertible(a.coeffs[0]); }
  Elem inv(const Elem& a) const {
    if (!invertible(a)) throw std::domain_error("polynomial ring: not a unit");
    return poly_constant(coeff, coeff.inv(a.coeffs[0]));
  }
  std::string str(const Elem&) const { return "<poly>"; }
};

/// Parses a univariate polynomial over Q; rejects 'y'.
QPoly parse_poly(const std::string& text);

/// Same expression parsed over F_p (or Z_n in ring mode).
Poly<IntegersMod> parse_poly_mod(const std::string& text, const IntegersMod& dom);

}  // namespace galois

#endif  // GALOIS_PARSE_HPP
