#include "yokotl/ring/parse.hpp"

#include <cctype>

namespace yokotl {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalFunction parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    RationalFunction r = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return r;
  }

 private:
  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc *= unary();
      } else if (peek() == '/') {
        int l = line_, c = col_;
        advance();
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("division by zero", l, c);
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    skip_space();
    if (peek() == '^') {
      int l = line_, c = col_;
      advance();
      int e = exponent();
      if (e < 0 && base.is_zero()) throw ParseError("negative power of zero", l, c);
      return base.pow(e);
    }
    return base;
  }

  int exponent() {
    skip_space();
    if (accept('(')) {
      int e = exponent();
      skip_space();
      expect(')');
      return e;
    }
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer exponent");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) fail("exponent too large");
      advance();
    }
    return neg ? -static_cast<int>(v) : static_cast<int>(v);
  }

  RationalFunction primary() {
    skip_space();
    char ch = peek();
    if (ch == '(') {
      advance();
      RationalFunction r = expr();
      skip_space();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string digits;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        digits += peek();
        advance();
      }
      return RationalFunction(Rational(Integer(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      int l = line_, c = col_;
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
        name += peek();
        advance();
      }
      if (name.rfind("zeta", 0) == 0 && name.size() > 4) {
        std::string tail = name.substr(4);
        bool numeric = tail.size() <= 6;
        for (char t : tail) numeric = numeric && std::isdigit(static_cast<unsigned char>(t));
        if (numeric) {
          int d = std::stoi(tail);
          if (d < 1) throw ParseError("zeta needs a positive order", l, c);
          return RationalFunction(CycloRational::root_of_unity(d, 1));
        }
      }
      return RationalFunction(LaurentPolynomial::variable(var_id(name)));
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected '") + ch + "'");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool accept(char c) {
    if (peek() != c || at_end()) return false;
    advance();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

}  // namespace

RationalFunction parse_expression(std::string_view text) { return Parser(text).parse(); }

LaurentPolynomial parse_polynomial(std::string_view text) {
  RationalFunction r = parse_expression(text);
  r.simplify();
  if (!r.is_polynomial()) throw ParseError("expression is not a Laurent polynomial", 1, 1);
  return r.num();
}

}  // namespace yokotl
