#include "galois/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace galois {

namespace {
constexpr int kMaxDegree = 8;
constexpr long kMaxClosure = 40320;  // 8!
}  // namespace

Permutation::Permutation(int n) : img_(static_cast<size_t>(n)) {
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("Permutation: degree out of range");
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  int n = degree();
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("Permutation: degree out of range");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : img_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("Permutation: not a bijection");
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (apply(i) != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree())
    throw std::invalid_argument("Permutation: degree mismatch in composition");
  std::vector<int> r(img_.size());
  for (int i = 1; i <= degree(); ++i) r[static_cast<size_t>(i - 1)] = apply(other.apply(i));
  return Permutation(std::move(r));
}

Permutation Permutation::inverse() const {
  std::vector<int> r(img_.size());
  for (int i = 1; i <= degree(); ++i) r[static_cast<size_t>(apply(i) - 1)] = i;
  return Permutation(std::move(r));
}

Permutation Permutation::power(int k) const {
  Permutation base = k >= 0 ? *this : inverse();
  int e = k >= 0 ? k : -k;
  Permutation acc(degree());
  for (int i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

int Permutation::order() const {
  Permutation p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++k;
  }
  return k;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> type;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[static_cast<size_t>(i - 1)]) continue;
    int len = 0, j = i;
    do {
      seen[static_cast<size_t>(j - 1)] = true;
      j = apply(j);
      ++len;
    } while (j != i);
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

Permutation parse_cycles(const std::string& s, int min_degree) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  if (i >= s.size() || s.compare(i, 2, "id") == 0) {
    return Permutation(min_degree);
  }
  int max_point = min_degree;
  while (i < s.size()) {
    skip_ws();
    if (i >= s.size()) break;
    if (s[i] != '(') throw std::invalid_argument("parse_cycles: expected '('");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (start == i) throw std::invalid_argument("parse_cycles: expected point");
      int pt = std::stoi(s.substr(start, i - start));
      if (pt < 1 || pt > kMaxDegree) throw std::invalid_argument("parse_cycles: point out of range");
      cyc.push_back(pt);
      max_point = std::max(max_point, pt);
      skip_ws();
      if (i < s.size() && (s[i] == ',' || s[i] == ' ')) {
        ++i;
        continue;
      }
      if (i < s.size() && s[i] == ')') {
        ++i;
        break;
      }
      throw std::invalid_argument("parse_cycles: expected ',' or ')'");
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  std::vector<int> img(static_cast<size_t>(max_point));
  std::iota(img.begin(), img.end(), 1);
  // rightmost cycle acts first
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cyc = *it;
    std::set<int> pts(cyc.begin(), cyc.end());
    if (pts.size() != cyc.size())
      throw std::invalid_argument("parse_cycles: repeated point within a cycle");
    std::vector<int> next = img;
    for (size_t k = 0; k < img.size(); ++k) {
      int mid = img[k];
      auto pos = std::find(cyc.begin(), cyc.end(), mid);
      next[k] = pos == cyc.end() ? mid : cyc[(static_cast<size_t>(pos - cyc.begin()) + 1) % cyc.size()];
    }
    img = std::move(next);
  }
  return Permutation(std::move(img));
}

std::string format_cycles(const Permutation& p) {
  if (p.is_identity()) return "id";
  std::string out;
  std::vector<bool> seen(static_cast<size_t>(p.degree()), false);
  for (int i = 1; i <= p.degree(); ++i) {
    if (seen[static_cast<size_t>(i - 1)] || p.apply(i) == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    do {
      if (!first) out += ",";
      out += std::to_string(j);
      seen[static_cast<size_t>(j - 1)] = true;
      j = p.apply(j);
      first = false;
    } while (j != i);
    out += ")";
  }
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  return std::includes(g.elements.begin(), g.elements.end(), elements.begin(), elements.end());
}

PermGroup generate(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw std::invalid_argument("generate: need at least one permutation");
  int n = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != n) throw std::invalid_argument("generate: mixed degrees");
  std::set<Permutation> closed{Permutation(n)};
  std::vector<Permutation> frontier{Permutation(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier) {
      for (const auto& g : gens) {
        Permutation p = g * e;
        if (closed.insert(p).second) next.push_back(std::move(p));
      }
    }
    if (static_cast<long>(closed.size()) > kMaxClosure)
      throw std::domain_error("generate: closure exceeds 8! elements");
    frontier = std::move(next);
  }
  PermGroup out;
  out.degree = n;
  out.generators = gens;
  out.elements.assign(closed.begin(), closed.end());
  return out;
}

bool is_abelian(const PermGroup& g) {
  for (const auto& a : g.generators)
    for (const auto& b : g.generators)
      if (!(a * b == b * a)) return false;
  return true;
}

bool is_normal(const PermGroup& h, const PermGroup& g) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("is_normal: H is not a subgroup of G");
  for (const auto& x : g.elements) {
    Permutation xi = x.inverse();
    for (const auto& a : h.generators)
      if (!h.contains(x * a * xi)) return false;
  }
  return true;
}

std::vector<PermGroup> subgroups(const PermGroup& g) {
  if (g.order() > 60) throw std::domain_error("subgroups: group order exceeds 60");
  std::set<std::vector<Permutation>> seen;
  std::vector<PermGroup> subs;
  auto add = [&](const PermGroup& h) {
    if (seen.insert(h.elements).second) subs.push_back(h);
  };
  // cyclic seeds
  for (const auto& x : g.elements) add(generate({x}));
  // close under pairwise joins until fixpoint
  for (bool grew = true; grew;) {
    grew = false;
    size_t count = subs.size();
    for (size_t i = 0; i < count; ++i) {
      for (size_t j = i + 1; j < count; ++j) {
        std::vector<Permutation> gens = subs[i].generators;
        gens.insert(gens.end(), subs[j].generators.begin(), subs[j].generators.end());
        PermGroup join = generate(gens);
        if (seen.insert(join.elements).second) {
          subs.push_back(std::move(join));
          grew = true;
        }
      }
    }
  }
  std::sort(subs.begin(), subs.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return subs;
}

std::vector<std::pair<int, int>> lattice(const std::vector<PermGroup>& subs) {
  std::vector<std::pair<int, int>> edges;
  int n = static_cast<int>(subs.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || subs[i].order() >= subs[j].order()) continue;
      if (!subs[i].is_subgroup_of(subs[j])) continue;
      bool covering = true;
      for (int k = 0; k < n && covering; ++k) {
        if (k == i || k == j) continue;
        if (subs[i].order() < subs[k].order() && subs[k].order() < subs[j].order() &&
            subs[i].is_subgroup_of(subs[k]) && subs[k].is_subgroup_of(subs[j]))
          covering = false;
      }
      if (covering) edges.emplace_back(i, j);
    }
  }
  return edges;
}

namespace {
PermGroup commutator_subgroup(const PermGroup& g) {
  std::set<Permutation> comms;
  for (const auto& a : g.elements) {
    Permutation ai = a.inverse();
    for (const auto& b : g.elements) {
      comms.insert(ai * b.inverse() * a * b);
    }
  }
  return generate(std::vector<Permutation>(comms.begin(), comms.end()));
}
}  // namespace

std::vector<PermGroup> derived_series(const PermGroup& g) {
  if (g.order() > 120) throw std::domain_error("derived_series: group order exceeds 120");
  std::vector<PermGroup> series{g};
  for (;;) {
    PermGroup next = commutator_subgroup(series.back());
    if (next.order() == series.back().order()) break;  // stable (perfect group)
    series.push_back(std::move(next));
    if (series.back().order() == 1) break;
  }
  return series;
}

bool is_solvable(const PermGroup& g) {
  auto series = derived_series(g);
  return series.back().order() == 1;
}

bool is_simple(const PermGroup& g) {
  if (g.order() > 60) throw std::domain_error("is_simple: group order exceeds 60");
  if (g.order() == 1) return false;
  for (const auto& x : g.elements) {
    if (x.is_identity()) continue;
    // normal closure of x
    std::vector<Permutation> gens;
    for (const auto& y : g.elements) gens.push_back(y * x * y.inverse());
    if (generate(gens).order() != g.order()) return false;
  }
  return true;
}

PermGroup symmetric_group(int n) {
  if (n == 1) return generate({Permutation(1)});
  std::vector<int> cyc(static_cast<size_t>(n));
  std::iota(cyc.begin(), cyc.end(), 2);
  cyc.back() = 1;
  Permutation ncycle(std::move(cyc));
  if (n == 2) return generate({ncycle});
  std::vector<int> sw(static_cast<size_t>(n));
  std::iota(sw.begin(), sw.end(), 1);
  std::swap(sw[0], sw[1]);
  return generate({Permutation(std::move(sw)), ncycle});
}

PermGroup alternating_group(int n) {
  PermGroup sn = symmetric_group(n);
  std::vector<Permutation> even;
  for (const auto& p : sn.elements) {
    int transpositions = 0;
    for (int len : p.cycle_type()) transpositions += len - 1;
    if (transpositions % 2 == 0) even.push_back(p);
  }
  return generate(even);
}

PermGroup dihedral_group(int n) {
  if (n < 3) throw std::invalid_argument("dihedral_group: need n >= 3");
  std::vector<int> rot(static_cast<size_t>(n));
  std::iota(rot.begin(), rot.end(), 2);
  rot.back() = 1;
  std::vector<int> refl(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) refl[static_cast<size_t>(i - 1)] = (n + 2 - i - 1) % n + 1;
  return generate({Permutation(std::move(rot)), Permutation(std::move(refl))});
}

PermGroup cyclic_group(int n) {
  if (n == 1) return generate({Permutation(1)});
  std::vector<int> cyc(static_cast<size_t>(n));
  std::iota(cyc.begin(), cyc.end(), 2);
  cyc.back() = 1;
  return generate({Permutation(std::move(cyc))});
}

}  // namespace galois
