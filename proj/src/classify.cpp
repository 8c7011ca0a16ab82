#include "galois/classify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace galois {

namespace {

const Rationals kQ;

struct LabelInfo {
  const char* name;
  long order;
  bool solvable;
};

LabelInfo info(GroupLabel label) {
  switch (label) {
    case GroupLabel::Trivial: return {"Trivial", 1, true};
    case GroupLabel::C2: return {"C2", 2, true};
    case GroupLabel::C3: return {"C3", 3, true};
    case GroupLabel::S3: return {"S3", 6, true};
    case GroupLabel::C4: return {"C4", 4, true};
    case GroupLabel::V4: return {"V4", 4, true};
    case GroupLabel::D4: return {"D4", 8, true};
    case GroupLabel::A4: return {"A4", 12, true};
    case GroupLabel::S4: return {"S4", 24, true};
    case GroupLabel::C5: return {"C5", 5, true};
    case GroupLabel::D5: return {"D5", 10, true};
    case GroupLabel::F20: return {"F20", 20, true};
    case GroupLabel::A5: return {"A5", 60, false};
    case GroupLabel::S5: return {"S5", 120, false};
    case GroupLabel::Reducible: return {"Reducible", 0, true};
    case GroupLabel::Unknown: return {"Unknown", 0, true};
  }
  throw std::logic_error("info: bad label");
}

GaloisClass make_class(GroupLabel label) {
  auto i = info(label);
  return {label, i.order, i.solvable, {}, {}};
}

bool disc_is_square(const QPoly& f) {
  return discriminant(kQ, f).square_root().has_value();
}

void require_squarefree(const QPoly& f) {
  if (f.degree() >= 1 && !poly_squarefree(kQ, f))
    throw std::domain_error("galois_group: polynomial has a repeated root");
}

using Partition = std::vector<int>;

/// Runs Dedekind sampling and classifies an irreducible quartic or
/// quintic. `early` types force an immediate verdict; the rest of the
/// decision table is applied once the prime budget is spent.
GaloisClass classify_irreducible(const QPoly& f, int max_primes) {
  const int n = f.degree();
  const bool square = disc_is_square(f);
  auto coeffs = primitive_integer_coeffs(f);

  std::set<Partition> observed;
  auto has = [&observed](std::initializer_list<int> parts) {
    return observed.count(Partition(parts)) > 0;
  };

  int used = 0;
  for (long p = 2; used < max_primes; ++p) {
    if (!is_prime(p)) continue;
    auto part = cycle_type(coeffs, p);
    if (!part) continue;
    ++used;
    observed.insert(*part);
    if (n == 5) {
      if (square && has({3, 1, 1})) return make_class(GroupLabel::A5);
      if (!square && (has({2, 1, 1, 1}) || has({3, 2}) || has({3, 1, 1})))
        return make_class(GroupLabel::S5);
    } else {
      if (square && has({3, 1})) return make_class(GroupLabel::A4);
      if (!square && has({3, 1})) return make_class(GroupLabel::S4);
    }
  }

  if (n == 5) {
    if (square) {
      // remaining candidates inside A5: C5 < D5 < A5
      if (has({3, 1, 1})) return make_class(GroupLabel::A5);
      if (has({2, 2, 1})) return make_class(GroupLabel::D5);
      return make_class(GroupLabel::C5);
    }
    if (has({4, 1})) return make_class(GroupLabel::F20);
    GaloisClass unknown = make_class(GroupLabel::Unknown);
    unknown.candidates = {GroupLabel::F20, GroupLabel::S5};
    return unknown;
  }
  if (square) {
    if (has({3, 1})) return make_class(GroupLabel::A4);
    return make_class(GroupLabel::V4);
  }
  if (has({2, 1, 1})) return make_class(GroupLabel::D4);
  if (has({4})) return make_class(GroupLabel::C4);
  GaloisClass unknown = make_class(GroupLabel::Unknown);
  unknown.candidates = {GroupLabel::C4, GroupLabel::D4, GroupLabel::S4};
  return unknown;
}

}  // namespace

std::string label_name(GroupLabel label) { return info(label).name; }

std::vector<CycleTypeSample> cycle_type_samples(const QPoly& f, int max_primes) {
  auto coeffs = primitive_integer_coeffs(f);
  std::vector<CycleTypeSample> out;
  for (long p = 2; static_cast<int>(out.size()) < max_primes; ++p) {
    if (!is_prime(p)) continue;
    if (auto part = cycle_type(coeffs, p)) out.push_back({p, *part});
    if (p > 1'000'000) break;  // unreachable for squarefree inputs
  }
  return out;
}

GaloisClass galois_group_quadratic(const QPoly& f) {
  if (f.degree() != 2) throw std::invalid_argument("galois_group_quadratic: degree must be 2");
  require_squarefree(f);
  return rational_roots(f).empty() ? make_class(GroupLabel::C2)
                                   : make_class(GroupLabel::Trivial);
}

GaloisClass galois_group_cubic(const QPoly& f) {
  if (f.degree() != 3) throw std::invalid_argument("galois_group_cubic: degree must be 3");
  require_squarefree(f);
  auto roots = rational_roots(f);
  if (roots.size() == 3) return make_class(GroupLabel::Trivial);
  if (roots.size() == 1) {
    // rational root times a quadratic; the quadratic is irreducible
    // here (a second rational root would have been found), so the
    // splitting field is the quadratic's: C2
    return make_class(GroupLabel::C2);
  }
  return disc_is_square(f) ? make_class(GroupLabel::C3) : make_class(GroupLabel::S3);
}

GaloisClass galois_group(const QPoly& f, int max_primes) {
  int n = f.degree();
  if (n < 1 || n > 5) throw std::invalid_argument("galois_group: degree must be 1..5");
  require_squarefree(f);
  if (n == 1) return make_class(GroupLabel::Trivial);
  if (n == 2) return galois_group_quadratic(f);
  if (n == 3) return galois_group_cubic(f);

  auto cert = is_irreducible_q(f);
  if (cert.verdict == Verdict::Reducible) {
    auto fac = factor_q(f);
    GaloisClass out = make_class(GroupLabel::Reducible);
    bool solvable = true;
    for (const auto& [factor, mult] : fac.factors) {
      for (int i = 0; i < mult; ++i) out.factor_degrees.push_back(factor.degree());
      solvable = solvable && galois_group(factor, max_primes).solvable;
    }
    std::sort(out.factor_degrees.rbegin(), out.factor_degrees.rend());
    out.solvable = solvable;
    return out;
  }
  return classify_irreducible(f, max_primes);
}

long splitting_degree(const QPoly& f, int max_primes) {
  int n = f.degree();
  if (n < 1) throw std::invalid_argument("splitting_degree: degree must be >= 1");
  if (n + 1 <= 1000 && is_prime(static_cast<long>(n + 1)) &&
      poly_eq(kQ, poly_monic(kQ, f), cyclotomic_p(n + 1))) {
    return n;  // Gal(Q(omega)/Q) is cyclic of order p - 1
  }
  if (n > 5) throw std::domain_error("splitting_degree: degree > 5 and not cyclotomic");
  auto cls = galois_group(f, max_primes);
  if (cls.label == GroupLabel::Unknown || cls.label == GroupLabel::Reducible)
    throw std::domain_error("splitting_degree: group order not determined for " +
                            label_name(cls.label) + " input");
  return cls.order;
}

bool is_solvable_by_radicals(const QPoly& f, int max_primes) {
  int n = f.degree();
  if (n < 1 || n > 5)
    throw std::invalid_argument("is_solvable_by_radicals: degree must be 1..5");
  // squarefree part has the same splitting field
  QPoly g = f;
  if (!poly_squarefree(kQ, g))
    g = poly_divmod(kQ, g, poly_gcd(kQ, g, poly_derivative(kQ, g))).quotient;
  auto cls = galois_group(g, max_primes);
  if (cls.label == GroupLabel::Unknown)
    throw std::domain_error("is_solvable_by_radicals: classification returned Unknown");
  return cls.solvable;
}

QuinticMap quintic_map(int range, int max_primes) {
  if (range < 0 || range > 100) throw std::invalid_argument("quintic_map: range must be 0..100");
  QuinticMap map;
  map.range = range;
  int side = 2 * range + 1;
  map.cells.assign(static_cast<size_t>(side) * side, GroupLabel::Unknown);
  for (int b = -range; b <= range; ++b) {
    for (int a = -range; a <= range; ++a) {
      QPoly f = poly_from_ints(kQ, {b, a, 0, 0, 0, 1});
      GroupLabel label;
      auto cert = is_irreducible_q(f);
      if (cert.verdict == Verdict::Reducible) {
        label = GroupLabel::Reducible;
      } else {
        label = classify_irreducible(f, max_primes).label;
      }
      map.cells[static_cast<size_t>((b + range) * side + (a + range))] = label;
      ++map.histogram[label_name(label)];
    }
  }
  return map;
}

}  // namespace galois
