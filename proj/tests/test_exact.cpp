#include "doctest.h"

#include <random>

#include "galois/matrix.hpp"
#include "galois/polynomial.hpp"
#include "galois/rational.hpp"

using namespace galois;

namespace {
Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}
}  // namespace

TEST_CASE("rational arithmetic basics") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(7, 3) * Rational(1) == Rational(7, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));  // canonical form
  CHECK(Rational(2, 4).num() == 1);
  CHECK(Rational(2, 4).den() == 2);
  CHECK(Rational(3, -6) == Rational(-1, 2));  // denominator stays positive
  CHECK(Rational(3, -6).den() == 2);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
  CHECK(Rational(0).den() == 1);
}

TEST_CASE("rational field axioms on random triples") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 200; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
}

TEST_CASE("is_perfect_square") {
  CHECK(is_perfect_square(BigInt(81)) == BigInt(9));
  CHECK_FALSE(is_perfect_square(BigInt(-108)).has_value());
  CHECK(is_perfect_square(BigInt(0)) == BigInt(0));
  CHECK_FALSE(is_perfect_square(BigInt(2)).has_value());
}

TEST_CASE("is_perfect_square recovers random 256-bit squares") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(99);
  for (int i = 0; i < 200; ++i) {
    BigInt k = rng.get_z_bits(256);
    CHECK(is_perfect_square(BigInt(k * k)) == k);
  }
}

TEST_CASE("kernel of full-rank and zero matrices") {
  CHECK(kernel(QMatrix::identity(3)).empty());

  QMatrix zero(2, 2);
  auto basis = kernel(zero);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == std::vector<Rational>{Rational(1), Rational(0)});
  CHECK(basis[1] == std::vector<Rational>{Rational(0), Rational(1)});
}

TEST_CASE("kernel vectors satisfy m v = 0 exactly on random matrices") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    QMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = random_rational(rng);
    std::size_t expected_nullity = 0;
    for (const auto& v : kernel(m)) {
      ++expected_nullity;
      for (const auto& entry : m.apply(v)) CHECK(entry.is_zero());
    }
    CHECK(kernel(m).size() == expected_nullity);
  }
}

TEST_CASE("rational squareness via lowest terms") {
  CHECK(Rational(4, 9).square_root() == Rational(2, 3));
  CHECK_FALSE(Rational(4, 8).square_root().has_value());  // 1/2 in lowest terms
  CHECK(Rational(0).square_root() == Rational(0));
}
