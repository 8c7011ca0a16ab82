#include "galois/irreducibility.hpp"

#include <algorithm>
#include <stdexcept>

#include "galois/numfield.hpp"
#include "galois/quotient.hpp"

namespace galois {

namespace {

const Rationals kQ;

QPoly from_bigints(const std::vector<BigInt>& c) {
  std::vector<Rational> r;
  r.reserve(c.size());
  for (const auto& z : c) r.emplace_back(z);
  return poly_trim(kQ, std::move(r));
}

/// All positive divisors of |n|, n != 0, by trial division.
std::vector<BigInt> positive_divisors(BigInt n) {
  n = big_abs(n);
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<long> prime_factors(BigInt n) {
  n = big_abs(n);
  std::vector<long> out;
  for (long p = 2; BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n.get_si());
  return out;
}

/// f(x + a) on integer coefficient vectors, by Horner.
std::vector<BigInt> shift_int(const std::vector<BigInt>& c, long a) {
  std::vector<BigInt> acc;  // coefficients of the running result
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    // acc = acc * (x + a) + coeff
    std::vector<BigInt> next(acc.size() + 1, BigInt(0));
    for (size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] += acc[i] * a;
    }
    if (next.empty()) next.push_back(BigInt(0));
    next[0] += *it;
    acc = std::move(next);
  }
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  return acc;
}

bool eisenstein_at(const std::vector<BigInt>& c, long p) {
  size_t n = c.size() - 1;
  if (c[n] % p == 0) return false;
  for (size_t i = 0; i < n; ++i)
    if (c[i] % p != 0) return false;
  return c[0] % (BigInt(p) * p) != 0;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  for (long p = 2; p <= bound; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

/// Degree partition of f mod p via distinct-degree factorization;
/// requires fp monic squarefree. Sorted descending.
std::vector<int> ddf_partition(const Fp& field, FpPoly f) {
  std::vector<int> parts;
  FpPoly h = poly_rem(field, poly_x(field), f);
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = poly_pow_mod(field, h, BigInt(static_cast<long>(field.modulus())), f);
    auto g = poly_gcd(field, f, poly_sub(field, h, poly_x(field)));
    if (g.degree() > 0) {
      for (int k = 0; k < g.degree() / d; ++k) parts.push_back(d);
      f = poly_divmod(field, f, g).quotient;
      h = poly_rem(field, h, f);
    }
  }
  if (f.degree() > 0) parts.push_back(f.degree());
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace

std::vector<BigInt> primitive_integer_coeffs(const QPoly& f) {
  if (f.is_zero()) throw std::domain_error("primitive_integer_coeffs: zero polynomial");
  BigInt den_lcm = 1;
  for (const auto& c : f.coeffs) {
    BigInt d = c.den();
    den_lcm = den_lcm / big_gcd(den_lcm, d) * d;
  }
  std::vector<BigInt> out;
  out.reserve(f.coeffs.size());
  BigInt content = 0;
  for (const auto& c : f.coeffs) {
    BigInt v = c.num() * (den_lcm / c.den());
    content = big_gcd(content, v);
    out.push_back(v);
  }
  for (auto& v : out) v /= content;
  if (out.back() < 0)
    for (auto& v : out) v = -v;
  return out;
}

std::vector<Rational> rational_roots(const QPoly& f) {
  if (f.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  if (f.degree() == 0) return {};
  auto c = primitive_integer_coeffs(f);
  std::vector<Rational> roots;
  size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low == c.size() - 1) {
    std::sort(roots.begin(), roots.end());
    return roots;  // pure power of x
  }
  // candidate roots m/n with m | constant, n | leading (both of the
  // x-stripped part)
  const BigInt& a0 = c[low];
  const BigInt& an = c.back();
  QPoly g = from_bigints(std::vector<BigInt>(c.begin() + static_cast<long>(low), c.end()));
  for (const auto& m : positive_divisors(a0)) {
    for (const auto& n : positive_divisors(an)) {
      for (int s : {1, -1}) {
        Rational cand(s * m, n);
        if (kQ.is_zero(poly_evaluate(kQ, g, cand))) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::optional<EisensteinWitness> eisenstein(const std::vector<BigInt>& coeffs,
                                            long max_shift) {
  if (coeffs.size() < 2) return std::nullopt;
  for (long k = 0; k <= 2 * max_shift; ++k) {
    long a = (k % 2 == 0) ? -k / 2 : (k + 1) / 2;  // 0, 1, -1, 2, -2, ...
    auto c = shift_int(coeffs, a);
    if (c.size() != coeffs.size()) continue;
    BigInt g = 0;
    for (size_t i = 0; i + 1 < c.size(); ++i) g = big_gcd(g, c[i]);
    if (g == 0) continue;
    for (long p : prime_factors(g)) {
      if (eisenstein_at(c, p)) return EisensteinWitness{p, a};
    }
  }
  return std::nullopt;
}

std::optional<long> reduction_test(const std::vector<BigInt>& coeffs,
                                   const std::vector<long>& primes) {
  for (long p : primes) {
    if (coeffs.back() % p == 0) continue;  // degree would drop
    auto part = cycle_type(coeffs, p);
    if (part && part->size() == 1 &&
        part->front() == static_cast<int>(coeffs.size()) - 1)
      return p;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> cycle_type(const std::vector<BigInt>& coeffs, long p) {
  if (coeffs.size() < 2) throw std::invalid_argument("cycle_type: constant polynomial");
  if (coeffs.back() % p == 0) return std::nullopt;
  Fp field = Fp::prime_field(p);
  std::vector<Fp::Elem> c;
  c.reserve(coeffs.size());
  for (const auto& z : coeffs) {
    BigInt r = z % p;
    if (r < 0) r += p;
    c.push_back(r.get_si());
  }
  FpPoly fp = poly_monic(field, poly_trim(field, std::move(c)));
  auto deriv = poly_derivative(field, fp);
  if (deriv.is_zero() || poly_gcd(field, fp, deriv).degree() != 0)
    return std::nullopt;  // ramified: f mod p has repeated factors
  return ddf_partition(field, fp);
}

IrreducibilityCertificate is_irreducible_q(const QPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible_q: degree must be >= 1");
  auto c = primitive_integer_coeffs(f);
  int n = static_cast<int>(c.size()) - 1;
  if (n == 1) return {Verdict::Irreducible, ExhaustedWitness{}};

  auto roots = rational_roots(f);
  if (!roots.empty()) return {Verdict::Reducible, RationalRootWitness{roots.front()}};
  if (n <= 3) return {Verdict::Irreducible, ExhaustedWitness{}};

  if (auto e = eisenstein(c)) return {Verdict::Irreducible, *e};
  if (auto p = reduction_test(c, primes_up_to(97)))
    return {Verdict::Irreducible, ReductionWitness{*p}};

  if (n > 5) return {Verdict::Unknown, ExhaustedWitness{}};

  // Degree 4 or 5 with no rational root: reducibility is equivalent to
  // an integer quadratic factor a x^2 + b x + c with a | lc, c | const
  // and |b| <= 2 a B for the Cauchy root bound B (Gauss's lemma).
  QPoly iv = from_bigints(c);
  BigInt max_abs = 0;
  for (size_t i = 0; i + 1 < c.size(); ++i) max_abs = std::max(max_abs, big_abs(c[i]));
  BigInt bound_num = max_abs + c.back();  // ceil bound on B * lc >= (1 + max|a_i|/lc) * lc
  for (const auto& a : positive_divisors(c.back())) {
    BigInt b_bound = 2 * a * bound_num / c.back() + 1;
    for (const auto& cd : positive_divisors(c.front())) {
      for (int s : {1, -1}) {
        for (BigInt b = -b_bound; b <= b_bound; ++b) {
          QPoly g = from_bigints({s * cd, b, a});
          auto qr = poly_divmod(kQ, iv, g);
          if (qr.remainder.is_zero())
            return {Verdict::Reducible, FactorPairWitness{g, qr.quotient}};
        }
      }
    }
  }
  return {Verdict::Irreducible, ExhaustedWitness{}};
}

QFactorization factor_q(const QPoly& f) {
  if (f.is_zero()) throw std::domain_error("factor_q: zero polynomial");
  QFactorization out{poly_lc(kQ, f), {}};
  std::vector<QPoly> work{poly_monic(kQ, f)};
  auto push_factor = [&out](const QPoly& g) {
    for (auto& [fac, mult] : out.factors) {
      if (poly_eq(kQ, fac, g)) {
        ++mult;
        return;
      }
    }
    out.factors.emplace_back(g, 1);
  };
  while (!work.empty()) {
    QPoly g = std::move(work.back());
    work.pop_back();
    if (g.degree() == 0) continue;
    auto cert = is_irreducible_q(g);
    switch (cert.verdict) {
      case Verdict::Irreducible:
        push_factor(poly_monic(kQ, g));
        break;
      case Verdict::Reducible:
        if (auto* root = std::get_if<RationalRootWitness>(&cert.witness)) {
          QPoly lin{{-root->root, Rational(1)}};
          push_factor(lin);
          work.push_back(poly_divmod(kQ, g, lin).quotient);
        } else {
          auto& pair = std::get<FactorPairWitness>(cert.witness);
          work.push_back(pair.g);
          work.push_back(pair.h);
        }
        break;
      case Verdict::Unknown:
        throw std::domain_error("factor_q: cannot certify a factor of degree > 5");
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    return x.first.degree() < y.first.degree();
  });
  return out;
}

// make_number_field / kronecker_extend over Q live here because they
// need certified irreducibility.

NumberField make_number_field(QPoly modulus) {
  if (modulus.degree() < 1)
    throw std::invalid_argument("make_number_field: modulus must be nonconstant");
  modulus = poly_monic(kQ, modulus);
  auto cert = is_irreducible_q(modulus);
  if (cert.verdict == Verdict::Reducible)
    throw std::invalid_argument("make_number_field: modulus is reducible over Q");
  if (cert.verdict == Verdict::Unknown)
    throw std::domain_error("make_number_field: cannot certify irreducibility");
  return NumberField(kQ, std::move(modulus), /*field=*/true);
}

TensorField make_tensor_field(QPoly f, QPoly g) {
  NumberField inner = make_number_field(std::move(f));
  auto cert = is_irreducible_q(poly_monic(kQ, g));
  if (cert.verdict != Verdict::Irreducible)
    throw std::invalid_argument("make_tensor_field: g must be certified irreducible over Q");
  auto g_lifted = poly_map(inner, poly_monic(kQ, g),
                           [&inner](const Rational& r) { return inner.embed(r); });
  return TensorField(std::move(inner), std::move(g_lifted), /*field=*/false);
}

QExtension kronecker_extend(const Rationals&, const QPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("kronecker_extend: f must be nonconstant");
  auto fac = factor_q(f);
  NumberField ext = make_number_field(fac.factors.front().first);
  auto root = ext.generator();
  if (!ext.is_zero(evaluate_in_extension(ext, f, root)))
    throw std::logic_error("kronecker_extend: root does not vanish");
  return {std::move(ext), std::move(root)};
}

}  // namespace galois
