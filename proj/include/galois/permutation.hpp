#ifndef GALOIS_PERMUTATION_HPP
#define GALOIS_PERMUTATION_HPP

#include <string>
#include <vector>

namespace galois {

/// Bijection of {1, ..., n}, n <= 8. images[i-1] is the image of i.
class Permutation {
 public:
  explicit Permutation(int n);                       // identity
  explicit Permutation(std::vector<int> images);     // validated

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int point) const { return img_[static_cast<size_t>(point - 1)]; }
  bool is_identity() const;

  /// Composition right-to-left: (a * b)(x) = a(b(x)), b applied first.
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  Permutation power(int k) const;
  int order() const;

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  /// Multiset of cycle lengths, including fixed points, sorted descending.
  std::vector<int> cycle_type() const;

  const std::vector<int>& images() const { return img_; }

 private:
  std::vector<int> img_;
};

/// Parses cycle notation, e.g. "(1,2)(3,4)"; "" and "id" give the
/// identity. Degree is max(mentioned points, min_degree).
Permutation parse_cycles(const std::string& s, int min_degree = 1);

/// Canonical disjoint-cycle form: each cycle starts at its smallest
/// moved point, cycles sorted by first point; identity prints "id".
std::string format_cycles(const Permutation& p);

/// Finitely generated subgroup of S_n with its full element set
/// (sorted, deduplicated).
struct PermGroup {
  int degree = 1;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted

  long order() const { return static_cast<long>(elements.size()); }
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& g) const;
  bool same_elements(const PermGroup& g) const { return elements == g.elements; }
};

/// Closure of the generators under products (breadth-first).
PermGroup generate(const std::vector<Permutation>& gens);

bool is_abelian(const PermGroup& g);
bool is_normal(const PermGroup& h, const PermGroup& g);

/// All subgroups, via cyclic seeds closed under pairwise joins.
/// Bounded to |G| <= 60.
std::vector<PermGroup> subgroups(const PermGroup& g);

/// Covering relations of the subgroup lattice as index pairs (i, j)
/// with subgroup i covered by subgroup j, over the subgroups() list.
std::vector<std::pair<int, int>> lattice(const std::vector<PermGroup>& subs);

/// Derived series G > [G,G] > ... until stable.
std::vector<PermGroup> derived_series(const PermGroup& g);
bool is_solvable(const PermGroup& g);

/// Only normal subgroups are {id} and G; trivial group not simple here
/// matters not for our uses. Bounded to |G| <= 60.
bool is_simple(const PermGroup& g);

// common named groups on small degrees
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup dihedral_group(int n);   // order 2n, acting on n points
PermGroup cyclic_group(int n);

}  // namespace galois

#endif  // GALOIS_PERMUTATION_HPP
