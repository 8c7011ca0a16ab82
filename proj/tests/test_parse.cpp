#include "doctest.h"

#include <random>

#include "galois/parse.hpp"

using namespace galois;

namespace {
const Rationals Q;

QPoly qp(std::vector<long> coeffs) { return poly_from_ints(Q, coeffs); }

QPoly random_qpoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 7);
  std::uniform_int_distribution<long> coef(-99, 99);
  std::vector<long> c(static_cast<size_t>(deg(rng)) + 1);
  for (auto& v : c) v = coef(rng);
  return qp(c);
}
}  // namespace

TEST_CASE("worked examples") {
  CHECK(poly_eq(Q, parse_poly("x^5 - 4x + 2"), qp({2, -4, 0, 0, 0, 1})));
  CHECK(parse_poly("0").is_zero());
  CHECK(poly_eq(Q, parse_poly("(x^2+1)^2"), qp({1, 0, 2, 0, 1})));
  CHECK(poly_eq(Q, parse_poly("x"), qp({0, 1})));
  CHECK(poly_eq(Q, parse_poly("-x"), qp({0, -1})));
  CHECK(poly_eq(Q, parse_poly("7"), qp({7})));
}

TEST_CASE("rational coefficients and implicit multiplication") {
  QPoly half_x{{Rational(0), Rational(1, 2)}};
  CHECK(poly_eq(Q, parse_poly("1/2 x"), half_x));
  CHECK(poly_eq(Q, parse_poly("1/2x"), half_x));
  CHECK(poly_eq(Q, parse_poly("(x+1)(x-1)"), qp({-1, 0, 1})));
  CHECK(poly_eq(Q, parse_poly("2*x^2"), qp({0, 0, 2})));
  CHECK(poly_eq(Q, parse_poly("x x"), qp({0, 0, 1})));
}

TEST_CASE("whitespace and the Unicode minus sign") {
  CHECK(poly_eq(Q, parse_poly("  x ^ 2  -  1 "), qp({-1, 0, 1})));
  CHECK(poly_eq(Q, parse_poly("x−2"), qp({-2, 1})));  // U+2212
}

TEST_CASE("parse(format(f)) is the identity") {
  std::mt19937 rng(1515);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_qpoly(rng);
    CHECK(poly_eq(Q, parse_poly(poly_to_string(f)), f));
  }
}

TEST_CASE("printing conventions") {
  CHECK(poly_to_string(qp({2, -4, 0, 0, 0, 1})) == "x^5 - 4x + 2");
  CHECK(poly_to_string(qp({0})) == "0");
  CHECK(poly_to_string(qp({-1})) == "-1");
  CHECK(poly_to_string(qp({0, 1})) == "x");
  CHECK(poly_to_string(qp({0, -1})) == "-x");
  CHECK(poly_to_string(qp({1, 1})) == "x + 1");
}

TEST_CASE("errors carry byte offsets") {
  CHECK_THROWS_AS(parse_poly("x +"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^"), ParseError);
  CHECK_THROWS_AS(parse_poly("(x"), ParseError);
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("x + $"), ParseError);
  try {
    parse_poly("x + $");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.offset == 4);
  }
}

TEST_CASE("exponents above 64 are rejected") {
  CHECK_THROWS_AS(parse_poly("x^65"), ParseError);
  CHECK(parse_poly("x^64").degree() == 64);
}

TEST_CASE("'y' is rejected in univariate contexts but parses as an expression") {
  CHECK_THROWS(parse_poly("x + y"));
  auto e = parse_expression("x y + 1");
  REQUIRE(e);
  Rational x(2), y(3);
  CHECK(eval_expr(Q, *e, x, &y) == Rational(7));
}

TEST_CASE("parsing over F_p") {
  IntegersMod f5 = IntegersMod::prime_field(5);
  auto f = parse_poly_mod("8x^3 - 6x - 1", f5);
  CHECK(poly_eq(f5, f, poly_from_ints(f5, {4, 4, 0, 3})));
  // coefficients divisible by p vanish, possibly dropping the degree
  CHECK(parse_poly_mod("5x^2 + 1", f5).degree() == 0);
  // rational literals use the inverse mod p: 1/2 = 3 mod 5
  CHECK(poly_eq(f5, parse_poly_mod("1/2", f5), poly_from_ints(f5, {3})));
}

TEST_CASE("expression evaluation matches polynomial evaluation") {
  std::mt19937 rng(1616);
  std::uniform_int_distribution<long> pt(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_qpoly(rng);
    auto text = poly_to_string(f);
    auto e = parse_expression(text);
    Rational x(pt(rng));
    CHECK(eval_expr(Q, *e, x) == poly_evaluate(Q, f, x));
  }
}
