#include "doctest.h"

#include <random>

#include "galois/irreducibility.hpp"

using namespace galois;

namespace {
const Rationals Q;

QPoly qp(std::vector<long> coeffs) { return poly_from_ints(Q, coeffs); }

std::vector<BigInt> zc(std::vector<long> coeffs) {
  std::vector<BigInt> out;
  for (long v : coeffs) out.emplace_back(v);
  return out;
}
}  // namespace

TEST_CASE("primitive integer form clears denominators and content") {
  auto c = primitive_integer_coeffs(poly_mul(Q, qp({1, 2}), poly_constant(Q, Rational(3, 4))));
  CHECK(c == zc({1, 2}));
  // leading coefficient is made positive
  CHECK(primitive_integer_coeffs(qp({2, -4})) == zc({-1, 2}));
}

TEST_CASE("rational roots worked examples") {
  CHECK(rational_roots(qp({4, 1, -6, 1})) == std::vector<Rational>{Rational(1)});
  CHECK(rational_roots(qp({-2, 0, 1})).empty());
  // x(x-1)(x-2) = x^3 - 3x^2 + 2x
  CHECK(rational_roots(qp({0, 2, -3, 1})) ==
        std::vector<Rational>{Rational(0), Rational(1), Rational(2)});
  // 2x - 1 has the non-integral root 1/2
  CHECK(rational_roots(qp({-1, 2})) == std::vector<Rational>{Rational(1, 2)});
}

TEST_CASE("rational roots really are roots, and integer roots divide the constant term") {
  std::mt19937 rng(515);
  std::uniform_int_distribution<long> coef(-8, 8);
  std::uniform_int_distribution<int> deg(1, 5);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<long> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coef(rng);
    auto f = qp(c);
    if (f.degree() < 1) continue;
    for (const auto& r : rational_roots(f)) {
      CHECK(Q.is_zero(poly_evaluate(Q, f, r)));
      ++checked;
    }
    // cross-check: every integer in [-10, 10] that is a root is reported
    auto roots = rational_roots(f);
    for (long k = -10; k <= 10; ++k) {
      if (Q.is_zero(poly_evaluate(Q, f, Rational(k))))
        CHECK(std::find(roots.begin(), roots.end(), Rational(k)) != roots.end());
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("Eisenstein worked examples") {
  auto w = eisenstein(zc({2, -4, 0, 0, 0, 1}));  // x^5 - 4x + 2
  REQUIRE(w.has_value());
  CHECK(w->p == 2);
  CHECK(w->shift == 0);

  // cyclotomic Phi_7 needs the shift x -> x + 1
  auto phi7 = eisenstein(zc({1, 1, 1, 1, 1, 1, 1}));
  REQUIRE(phi7.has_value());
  CHECK(phi7->p == 7);
  CHECK(phi7->shift == 1);

  // x^2 + 1 becomes x^2 + 2x + 2 after the shift x -> x + 1
  auto sq = eisenstein(zc({1, 0, 1}));
  REQUIRE(sq.has_value());
  CHECK(sq->p == 2);
  CHECK(sq->shift == 1);

  CHECK_FALSE(eisenstein(zc({4, 0, 1})).has_value());  // x^2 + 4 resists all shifts <= 10
}

TEST_CASE("cycle_type admissibility and values") {
  // x^2 + 1 mod 5 = (x+2)(x+3): partition [1,1]
  CHECK(cycle_type(zc({1, 0, 1}), 5) == std::vector<int>{1, 1});
  // x^2 + 1 mod 3 irreducible: partition [2]
  CHECK(cycle_type(zc({1, 0, 1}), 3) == std::vector<int>{2});
  // p = 2 is inadmissible: x^2 + 1 = (x+1)^2 mod 2
  CHECK_FALSE(cycle_type(zc({1, 0, 1}), 2).has_value());
  // p dividing the leading coefficient is inadmissible
  CHECK_FALSE(cycle_type(zc({1, 0, 3}), 3).has_value());
}

TEST_CASE("cycle_type partitions sum to the degree") {
  std::mt19937 rng(616);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> c(6);
    for (auto& v : c) v = coef(rng);
    c[5] = 1;
    for (long p : {3L, 5L, 7L, 11L}) {
      auto ct = cycle_type(zc(c), p);
      if (!ct) continue;
      int sum = 0;
      for (int d : *ct) sum += d;
      CHECK(sum == 5);
      CHECK(std::is_sorted(ct->rbegin(), ct->rend()));
    }
  }
}

TEST_CASE("reduction test worked examples") {
  // 8x^3 - 6x - 1: p=2 drops the degree, mod 3 is reducible, mod 5 works
  CHECK(reduction_test(zc({-1, -6, 0, 8}), {2, 3, 5}) == 5);
  CHECK(reduction_test(zc({1, 0, 1}), {3}) == 3);
  CHECK_FALSE(reduction_test(zc({-1, 0, 1}), {2, 3, 5, 7, 11}).has_value());
}

TEST_CASE("irreducibility verdicts on worked examples") {
  auto c1 = is_irreducible_q(qp({2, -4, 0, 0, 0, 1}));
  CHECK(c1.verdict == Verdict::Irreducible);
  CHECK(std::holds_alternative<EisensteinWitness>(c1.witness));

  auto c2 = is_irreducible_q(qp({-1, -6, 0, 8}));  // 8x^3 - 6x - 1
  CHECK(c2.verdict == Verdict::Irreducible);

  auto c3 = is_irreducible_q(qp({1, 0, 2, 0, 1}));  // (x^2+1)^2
  CHECK(c3.verdict == Verdict::Reducible);
  REQUIRE(std::holds_alternative<FactorPairWitness>(c3.witness));
  const auto& w = std::get<FactorPairWitness>(c3.witness);
  CHECK(poly_eq(Q, poly_mul(Q, w.g, w.h), qp({1, 0, 2, 0, 1})));

  auto c4 = is_irreducible_q(qp({4, 1, -6, 1}));  // has root 1
  CHECK(c4.verdict == Verdict::Reducible);
  CHECK(std::holds_alternative<RationalRootWitness>(c4.witness));

  // no rational root but still reducible: (x^2+1)(x^2+2)
  auto c5 = is_irreducible_q(qp({2, 0, 3, 0, 1}));
  CHECK(c5.verdict == Verdict::Reducible);

  // x^2 + 1: certified by reduction mod 3
  auto c6 = is_irreducible_q(qp({1, 0, 1}));
  CHECK(c6.verdict == Verdict::Irreducible);

  CHECK(is_irreducible_q(qp({-2, 0, 1})).verdict == Verdict::Irreducible);
  CHECK(is_irreducible_q(qp({1, -3, 0, 1})).verdict == Verdict::Irreducible);
  CHECK(is_irreducible_q(qp({5, 5})).verdict == Verdict::Irreducible);  // linear
  CHECK_THROWS_AS(is_irreducible_q(qp({7})), std::invalid_argument);    // constant
}

TEST_CASE("factor_q worked examples") {
  auto f = factor_q(qp({1, 0, 2, 0, 1}));  // (x^2+1)^2
  CHECK(f.unit == Rational(1));
  REQUIRE(f.factors.size() == 1);
  CHECK(poly_eq(Q, f.factors[0].first, qp({1, 0, 1})));
  CHECK(f.factors[0].second == 2);

  auto g = factor_q(qp({0, -2, 0, 2}));  // 2x(x^2 - 1) = 2x(x-1)(x+1)
  CHECK(g.unit == Rational(2));
  CHECK(g.factors.size() == 3);
}

TEST_CASE("factor_q remultiplies and factors are irreducible") {
  std::mt19937 rng(717);
  std::uniform_int_distribution<long> coef(-6, 6);
  std::uniform_int_distribution<int> deg(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coef(rng);
    auto f = qp(c);
    if (f.degree() < 1) continue;
    auto fac = factor_q(f);
    auto prod = poly_constant(Q, fac.unit);
    for (const auto& [g, mult] : fac.factors) {
      CHECK(is_irreducible_q(g).verdict == Verdict::Irreducible);
      CHECK(Q.eq(poly_lc(Q, g), Q.one()));
      for (int k = 0; k < mult; ++k) prod = poly_mul(Q, prod, g);
    }
    CHECK(poly_eq(Q, prod, f));
  }
}

TEST_CASE("verdicts agree with a small exhaustive oracle on degree <= 3") {
  // oracle: degree <= 3 is reducible over Q iff it has a rational root
  std::mt19937 rng(818);
  std::uniform_int_distribution<long> coef(-8, 8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long> c{coef(rng), coef(rng), coef(rng), coef(rng)};
    auto f = qp(c);
    if (f.degree() != 3) continue;
    bool has_root = !rational_roots(f).empty();
    auto v = is_irreducible_q(f).verdict;
    CHECK(v == (has_root ? Verdict::Reducible : Verdict::Irreducible));
  }
}
