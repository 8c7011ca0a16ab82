#include "galois/parse.hpp"

#include <cctype>

namespace galois {

namespace {

constexpr unsigned long kMaxExponent = 64;

class Parser {
 public:
  explicit Parser(std::string text) : text_(normalize(std::move(text))) {}

  std::unique_ptr<Expr> run() {
    auto e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  static std::string normalize(std::string s) {
    // Unicode minus U+2212 -> ASCII '-'
    std::string out;
    for (size_t i = 0; i < s.size();) {
      if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
          static_cast<unsigned char>(s[i + 1]) == 0x88 &&
          static_cast<unsigned char>(s[i + 2]) == 0x92) {
        out += '-';
        i += 3;
      } else {
        out += s[i++];
      }
    }
    return out;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  static std::unique_ptr<Expr> node(Expr::Kind k, std::unique_ptr<Expr> l = nullptr,
                                    std::unique_ptr<Expr> r = nullptr) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  std::unique_ptr<Expr> parse_expr() {
    skip_ws();
    std::unique_ptr<Expr> acc;
    if (eat('-')) {
      acc = node(Expr::Kind::Neg, parse_term());
    } else {
      acc = parse_term();
    }
    for (;;) {
      if (eat('+')) {
        acc = node(Expr::Kind::Add, std::move(acc), parse_term());
      } else if (eat('-')) {
        acc = node(Expr::Kind::Sub, std::move(acc), parse_term());
      } else {
        return acc;
      }
    }
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == '(';
  }

  std::unique_ptr<Expr> parse_term() {
    auto acc = parse_factor();
    for (;;) {
      if (eat('*')) {
        acc = node(Expr::Kind::Mul, std::move(acc), parse_factor());
      } else if (at_atom_start()) {  // implicit multiplication
        acc = node(Expr::Kind::Mul, std::move(acc), parse_factor());
      } else {
        return acc;
      }
    }
  }

  std::unique_ptr<Expr> parse_factor() {
    auto base = parse_atom();
    if (eat('^')) {
      skip_ws();
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected exponent", pos_);
      unsigned long e = std::stoul(text_.substr(start, pos_ - start));
      if (e > kMaxExponent) throw ParseError("exponent too large", start);
      auto n = node(Expr::Kind::Pow, std::move(base));
      n->exponent = e;
      return n;
    }
    return base;
  }

  std::unique_ptr<Expr> parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (c == 'x') {
      ++pos_;
      return node(Expr::Kind::VarX);
    }
    if (c == 'y') {
      ++pos_;
      return node(Expr::Kind::VarY);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      BigInt num(text_.substr(start, pos_ - start));
      BigInt den = 1;
      size_t save = pos_;
      if (eat('/')) {
        skip_ws();
        size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) {
          pos_ = save;  // not a fraction after all
        } else {
          den = BigInt(text_.substr(dstart, pos_ - dstart));
          if (den == 0) throw ParseError("zero denominator", dstart);
        }
      }
      auto e = node(Expr::Kind::Num);
      e->value = Rational(num, den);
      return e;
    }
    throw ParseError("unexpected character", pos_);
  }

  std::string text_;
  size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Expr> parse_expression(const std::string& text) { return Parser(text).run(); }

QPoly parse_poly(const std::string& text) {
  auto ast = parse_expression(text);
  PolyRingOf<Rationals> ring;
  return eval_expr(ring, *ast, poly_x(ring.coeff));
}

Poly<IntegersMod> parse_poly_mod(const std::string& text, const IntegersMod& dom) {
  auto ast = parse_expression(text);
  PolyRingOf<IntegersMod> ring{dom};
  return eval_expr(ring, *ast, poly_x(ring.coeff));
}

std::string poly_to_string(const QPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const Rational& c = f.coeffs[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    Rational a = c;
    if (out.empty()) {
      if (a.sign() < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    bool coeff_is_one = (a == Rational(1));
    if (i == 0) {
      out += a.str();
    } else {
      if (!coeff_is_one) out += a.str();
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace galois
