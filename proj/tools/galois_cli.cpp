#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "galois/classify.hpp"
#include "galois/construct.hpp"
#include "galois/irreducibility.hpp"
#include "galois/numfield.hpp"
#include "galois/parse.hpp"
#include "galois/permutation.hpp"
#include "galois/quotient.hpp"

using json = nlohmann::ordered_json;
using namespace galois;

namespace {

const Rationals Q;

json poly_json(const QPoly& f) {
  json out;
  out["poly"] = poly_to_string(f);
  json coeffs = json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(c.str());
  out["coefficients"] = coeffs;
  return out;
}

std::string fp_poly_string(const Fp& dom, const FpPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    auto c = poly_coeff(dom, f, i);
    if (dom.is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

json fp_poly_json(const Fp& dom, const FpPoly& f) {
  json out;
  out["poly"] = fp_poly_string(dom, f);
  json coeffs = json::array();
  for (auto c : f.coeffs) coeffs.push_back(c);
  out["coefficients"] = coeffs;
  return out;
}

// Moduli are univariate; accept them written in either x or y.
QPoly parse_modulus(std::string text) {
  for (char& c : text)
    if (c == 'y') c = 'x';
  return parse_poly(text);
}

int default_max_primes() {
  if (const char* env = std::getenv("GALOIS_MAX_PRIMES")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 200;
}

json witness_json(const IrrWitness& w) {
  json out;
  if (const auto* e = std::get_if<EisensteinWitness>(&w)) {
    out["eisenstein"] = {{"p", e->p}, {"shift", e->shift}};
  } else if (const auto* r = std::get_if<ReductionWitness>(&w)) {
    out["reduction"] = {{"p", r->p}};
  } else if (const auto* rr = std::get_if<RationalRootWitness>(&w)) {
    out["rational_root"] = {{"root", rr->root.str()}};
  } else if (const auto* fp = std::get_if<FactorPairWitness>(&w)) {
    out["factor_pair"] = {{"g", poly_json(fp->g)}, {"h", poly_json(fp->h)}};
  } else {
    out["exhausted"] = json::object();
  }
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Irreducible: return "irreducible";
    case Verdict::Reducible: return "reducible";
    default: return "unknown";
  }
}

json class_json(const GaloisClass& cls) {
  json out;
  out["group"] = label_name(cls.label);
  out["order"] = cls.order;
  out["solvable"] = cls.solvable;
  if (!cls.factor_degrees.empty()) out["factor_degrees"] = cls.factor_degrees;
  if (!cls.candidates.empty()) {
    json cand = json::array();
    for (auto c : cls.candidates) cand.push_back(label_name(c));
    out["candidates"] = cand;
  }
  return out;
}

json verdict_json(const ConstructibilityVerdict& v) {
  json out;
  out["answer"] = construct_answer_name(v.answer);
  out["reason"] = v.reason;
  if (v.power_of_two || !v.fermat_primes.empty()) {
    out["power_of_two"] = v.power_of_two;
    out["fermat_primes"] = v.fermat_primes;
  }
  if (v.degree) out["degree"] = v.degree;
  return out;
}

void write_ppm(const QuinticMap& map, const std::string& path) {
  struct Rgb { int r, g, b; };
  auto color = [](GroupLabel label) -> Rgb {
    switch (label) {
      case GroupLabel::Reducible: return {0, 0, 0};
      case GroupLabel::C5: return {0, 0, 255};
      case GroupLabel::D5: return {0, 128, 255};
      case GroupLabel::F20: return {0, 255, 128};
      case GroupLabel::A5: return {255, 128, 0};
      case GroupLabel::S5: return {230, 230, 230};
      default: return {255, 0, 255};
    }
  };
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  int side = 2 * map.range + 1;
  out << "P3\n" << side << " " << side << "\n255\n";
  for (int b = map.range; b >= -map.range; --b) {    // rows: b descending
    for (int a = -map.range; a <= map.range; ++a) {  // columns: a ascending
      Rgb c = color(map.at(a, b));
      out << c.r << " " << c.g << " " << c.b << (a == map.range ? "\n" : " ");
    }
  }
}

struct NamedGroup {
  std::string label;
  PermGroup group;
};

NamedGroup named_group(const std::string& name) {
  if (name == "s3") return {"S3", symmetric_group(3)};
  if (name == "s4") return {"S4", symmetric_group(4)};
  if (name == "a4") return {"A4", alternating_group(4)};
  if (name == "a5") return {"A5", alternating_group(5)};
  if (name == "d4") return {"D4", dihedral_group(4)};
  if (name == "d5") return {"D5", dihedral_group(5)};
  if (name.size() >= 2 && name[0] == 'c') {
    int n = std::atoi(name.c_str() + (name[1] == '_' ? 2 : 1));
    if (n >= 1 && n <= 60) return {"C" + std::to_string(n), cyclic_group(n)};
  }
  throw std::invalid_argument("unknown group '" + name +
                              "' (expected s3, s4, a4, a5, d4, d5 or c<n>)");
}

// ---- subcommand bodies; each prints one JSON object to stdout ----

void run_irr(const std::string& text, long mod) {
  json out;
  out["input"] = text;
  if (mod) {
    Fp dom = Fp::prime_field(mod);
    auto f = parse_poly_mod(text, dom);
    if (f.degree() < 1) throw std::domain_error("irr: polynomial is constant mod p");
    out["mod"] = mod;
    bool irr = is_irreducible_over(dom, f);
    out["verdict"] = irr ? "irreducible" : "reducible";
    if (!irr) {
      json factors = json::array();
      for (const auto& [g, mult] : factor_over(dom, f))
        factors.push_back({{"factor", fp_poly_json(dom, g)}, {"multiplicity", mult}});
      out["factors"] = factors;
    }
  } else {
    auto f = parse_poly(text);
    auto cert = is_irreducible_q(f);
    out["verdict"] = verdict_name(cert.verdict);
    out["witness"] = witness_json(cert.witness);
  }
  std::cout << out.dump(2) << "\n";
}

void run_gcd(const std::string& ftext, const std::string& gtext, long mod) {
  json out;
  if (mod) {
    Fp dom = Fp::prime_field(mod);
    auto f = parse_poly_mod(ftext, dom);
    auto g = parse_poly_mod(gtext, dom);
    auto bez = poly_gcd_bezout(dom, f, g);
    out["mod"] = mod;
    out["gcd"] = fp_poly_json(dom, bez.gcd);
    out["bezout"] = {{"u", fp_poly_json(dom, bez.a)}, {"v", fp_poly_json(dom, bez.b)}};
  } else {
    auto f = parse_poly(ftext);
    auto g = parse_poly(gtext);
    auto bez = poly_gcd_bezout(Q, f, g);
    out["gcd"] = poly_json(bez.gcd);
    out["bezout"] = {{"u", poly_json(bez.a)}, {"v", poly_json(bez.b)}};
  }
  std::cout << out.dump(2) << "\n";
}

void run_group(const std::string& text, int max_primes) {
  auto f = parse_poly(text);
  json out;
  out["input"] = text;
  out.update(class_json(galois_group(f, max_primes)));
  std::cout << out.dump(2) << "\n";
}

void run_solvable(const std::string& text, int max_primes) {
  auto f = parse_poly(text);
  json out;
  out["input"] = text;
  out["solvable_by_radicals"] = is_solvable_by_radicals(f, max_primes);
  std::cout << out.dump(2) << "\n";
}

void run_minpoly(const std::string& ftext, const std::string& gtext,
                 const std::string& elem) {
  auto f = parse_poly(ftext);
  auto e = parse_expression(elem);
  json out;
  QPoly mp;
  if (gtext.empty()) {
    auto field = make_number_field(f);
    auto x = field.generator();
    mp = min_poly_of_element(field, eval_expr(field, *e, x));
    out["field"] = "Q[x]/<" + poly_to_string(f) + ">";
  } else {
    auto g = parse_modulus(gtext);
    auto field = make_tensor_field(f, g);
    auto x = field.embed(field.base().generator());
    auto y = field.generator();
    mp = min_poly_of_element(field, eval_expr(field, *e, x, &y));
    out["field"] = "Q(x, y) with " + poly_to_string(f) + " = 0 and " +
                   poly_to_string(g, "y") + " = 0";
  }
  out["element"] = elem;
  out["min_poly"] = poly_json(mp);
  out["degree"] = mp.degree();
  std::cout << out.dump(2) << "\n";
}

void run_ff(long p, int degree, const std::string& modtext, bool ring, bool table) {
  json out;
  if (ring) {
    IntegersMod zn(p);
    out["ring"] = "Z_" + std::to_string(p);
    out["size"] = p;
    out["field"] = zn.is_field();
    if (table) {
      json rows = json::array();
      for (const auto& row : multiplication_table(zn)) rows.push_back(row);
      out["table"] = rows;
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  Fp base = Fp::prime_field(p);
  FpPoly modulus =
      modtext.empty() ? find_irreducible(base, degree) : parse_poly_mod(modtext, base);
  FpExt field = make_finite_field(p, modulus);
  out["characteristic"] = p;
  out["degree"] = field.extension_degree();
  out["size"] = field.size();
  out["modulus"] = fp_poly_json(base, modulus);
  out["generator"] = field.str(multiplicative_generator(field));
  if (field.size() <= 256) {
    json elems = json::array();
    for (std::int64_t i = 0; i < field.size(); ++i) elems.push_back(field.str(field.nth(i)));
    out["elements"] = elems;
  }
  if (table) {
    json rows = json::array();
    for (const auto& row : multiplication_table(field)) {
      json r = json::array();
      for (const auto& e : row) r.push_back(field.str(e));
      rows.push_back(r);
    }
    out["table"] = rows;
  }
  std::cout << out.dump(2) << "\n";
}

void run_perm(const std::string& word, int degree) {
  auto p = parse_cycles(word, degree);
  json out;
  out["input"] = word;
  out["result"] = format_cycles(p);
  out["degree"] = p.degree();
  out["order"] = p.order();
  out["cycle_type"] = p.cycle_type();
  std::cout << out.dump(2) << "\n";
}

void run_lattice(const std::string& name, const std::string& out_path) {
  auto [label, group] = named_group(name);
  auto subs = subgroups(group);
  auto edges = lattice(subs);
  auto node_name = [&subs](int i) {
    return "H" + std::to_string(i) + " (order " +
           std::to_string(subs[static_cast<size_t>(i)].order()) + ")";
  };
  json out;
  out["group"] = label;
  out["order"] = group.order();
  out["subgroups"] = subs.size();
  json nodes = json::array();
  for (size_t i = 0; i < subs.size(); ++i) {
    json node;
    node["name"] = node_name(static_cast<int>(i));
    node["order"] = subs[i].order();
    json gens = json::array();
    for (const auto& g : subs[i].generators) gens.push_back(format_cycles(g));
    node["generators"] = gens;
    nodes.push_back(node);
  }
  out["nodes"] = nodes;
  json edge_list = json::array();
  std::string dot = "graph lattice {\n";
  for (auto [i, j] : edges) {
    edge_list.push_back({node_name(i), node_name(j)});
    dot += "  \"" + node_name(i) + "\" -- \"" + node_name(j) + "\";\n";
  }
  dot += "}\n";
  out["edges"] = edge_list;
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw std::runtime_error("cannot open " + out_path + " for writing");
    file << dot;
    out["dot_file"] = out_path;
  } else {
    out["dot"] = dot;
  }
  std::cout << out.dump(2) << "\n";
}

void run_quintic_map(int range, const std::string& out_path, int max_primes) {
  auto map = quintic_map(range, max_primes);
  json out;
  out["range"] = range;
  out["cells"] = (2 * range + 1) * (2 * range + 1);
  out["histogram"] = map.histogram;
  if (!out_path.empty()) {
    write_ppm(map, out_path);
    out["image"] = out_path;
  }
  std::cout << out.dump(2) << "\n";
}

void run_tower(const std::string& ftext, const std::string& gtext) {
  auto f = parse_poly(ftext);
  auto g = parse_modulus(gtext);
  auto field = make_tensor_field(f, g);
  auto pe = primitive_element(field);
  json out;
  out["step_degrees"] = {f.degree(), g.degree()};
  out["degree"] = tower_degree({f.degree(), g.degree()});
  std::string elem = pe.c == 0   ? "x"
                     : pe.c == 1 ? "x + y"
                                 : "x + " + std::to_string(pe.c) + "y";
  out["primitive_element"] = {{"c", pe.c}, {"element", elem},
                              {"min_poly", poly_json(pe.min_poly)}};
  std::cout << out.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computational Galois theory toolkit"};
  app.require_subcommand(1);
  int max_primes = default_max_primes();

  std::string poly_text, g_text, elem_text, out_path, word, name;
  long mod = 0, n = 0, p = 0;
  int degree = 1, range = 40;
  bool ring = false, table = false;

  auto* irr = app.add_subcommand("irr", "Irreducibility over Q (or F_p) with a certificate");
  irr->add_option("poly", poly_text, "polynomial, e.g. \"x^5 - 4x + 2\"")->required();
  irr->add_option("--mod", mod, "work over F_p instead of Q");

  auto* gcd = app.add_subcommand("gcd", "Polynomial gcd with the Bezout identity");
  gcd->add_option("f", poly_text, "first polynomial")->required();
  gcd->add_option("g", g_text, "second polynomial")->required();
  gcd->add_option("--mod", mod, "work over F_p instead of Q");

  auto* group = app.add_subcommand("group", "Galois group of a polynomial of degree <= 5");
  group->add_option("poly", poly_text)->required();
  group->add_option("--max-primes", max_primes, "cycle-type sampling budget");

  auto* solv = app.add_subcommand("solvable", "Solvability by radicals");
  solv->add_option("poly", poly_text)->required();
  solv->add_option("--max-primes", max_primes);

  auto* minp = app.add_subcommand("minpoly", "Minimum polynomial of an algebraic element");
  minp->add_option("--f", poly_text, "modulus of the generator x")->required();
  minp->add_option("--g", g_text, "modulus of a second generator y");
  minp->add_option("element", elem_text, "element expression in x (and y)")->required();

  auto* ff = app.add_subcommand("ff", "Construct a finite field (or Z_n in ring mode)");
  ff->add_option("p", p, "characteristic (modulus in ring mode)")->required();
  ff->add_option("--degree", degree, "extension degree (default 1)");
  ff->add_option("--modulus", poly_text, "explicit irreducible modulus over F_p");
  ff->add_flag("--ring", ring, "treat p as a plain Z_n modulus");
  ff->add_flag("--table", table, "include the multiplication table");

  auto* ngon = app.add_subcommand("ngon", "Constructibility of the regular n-gon");
  ngon->add_option("n", n)->required();

  auto* angle = app.add_subcommand("angle", "Constructibility of the angle pi/n");
  angle->add_option("n", n)->required();

  auto* con = app.add_subcommand("constructible",
                                 "Power-of-two necessary test for a minimum polynomial");
  con->add_option("poly", poly_text)->required();

  auto* perm = app.add_subcommand("perm", "Compose permutations in cycle notation");
  perm->add_option("word", word, "e.g. \"(1,2)(1,2,4,3)(1,3)(2,4)\"")->required();
  perm->add_option("--degree", degree, "minimum number of points");

  auto* lat = app.add_subcommand("lattice", "Subgroup lattice of a named group as DOT");
  lat->add_option("name", name, "s3, s4, a4, a5, d4, d5 or c<n>")->required();
  lat->add_option("--out", out_path, "write DOT to this file");

  auto* qmap = app.add_subcommand("quintic-map", "Classify x^5 + ax + b over a grid");
  qmap->add_option("--range", range, "grid radius R (default 40)");
  qmap->add_option("--out", out_path, "write a plain PPM image here");
  qmap->add_option("--max-primes", max_primes);

  auto* tower = app.add_subcommand("tower", "Two-step extension degrees and primitive element");
  tower->add_option("--f", poly_text)->required();
  tower->add_option("--g", g_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*irr) run_irr(poly_text, mod);
    else if (*gcd) run_gcd(poly_text, g_text, mod);
    else if (*group) run_group(poly_text, max_primes);
    else if (*solv) run_solvable(poly_text, max_primes);
    else if (*minp) run_minpoly(poly_text, g_text, elem_text);
    else if (*ff) run_ff(p, degree, poly_text, ring, table);
    else if (*ngon) std::cout << verdict_json(ngon_constructible(n)).dump(2) << "\n";
    else if (*angle) std::cout << verdict_json(angle_pi_over_n_constructible(n)).dump(2) << "\n";
    else if (*con) std::cout << verdict_json(number_necessary_test(parse_poly(poly_text))).dump(2) << "\n";
    else if (*perm) run_perm(word, degree);
    else if (*lat) run_lattice(name, out_path);
    else if (*qmap) run_quintic_map(range, out_path, max_primes);
    else if (*tower) run_tower(poly_text, g_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
