#include "hopfcert/expr.hpp"

#include <cctype>

namespace hopfcert {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  QPoly parse() {
    skip_ws();
    if (eof()) throw ParseError("empty expression", col());
    QPoly p = expr();
    skip_ws();
    if (!eof()) throw ParseError("unexpected trailing input", col());
    return p;
  }

 private:
  const std::string& s_;
  size_t i_ = 0;

  bool eof() const { return i_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[i_]; }
  char get() { return s_[i_++]; }
  int col() const { return static_cast<int>(i_) + 1; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++i_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++i_;
      return true;
    }
    return false;
  }

  QPoly expr() {
    QPoly acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  QPoly term() {
    QPoly acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        int at = col();
        QPoly d = factor();
        if (d.degree() > 0)
          throw ParseError("division by a non-constant expression", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        Rational inv = Rational(1) / Rational(d.coeff(0));
        acc = inv * acc;
      } else {
        return acc;
      }
    }
  }

  QPoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    QPoly base = atom();
    skip_ws();
    if (peek() == '^') {
      ++i_;
      long e = exponent();
      return poly_pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  long exponent() {
    skip_ws();
    bool paren = accept('(');
    skip_ws();
    int at = col();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++i_;
    } else if (peek() == '+') {
      ++i_;
    }
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("exponent must be an integer literal", col());
    std::string num = digits();
    if (peek() == '.' || peek() == '/')
      throw ParseError("exponent must be an integer", col());
    if (paren && !accept(')')) throw ParseError("missing ')' in exponent", col());
    if (neg) throw ParseError("negative exponent", at);
    long e = std::stol(num);
    if (e > 64) throw ParseError("exponent too large", at);
    return e;
  }

  std::string digits() {
    std::string out;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(get());
    return out;
  }

  QPoly atom() {
    skip_ws();
    if (eof()) throw ParseError("unexpected end of expression", col());
    char c = peek();
    if (c == '(') {
      ++i_;
      QPoly inner = expr();
      if (!accept(')')) throw ParseError("missing ')'", col());
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      int at = col();
      std::string lit = digits();
      if (peek() == '.') {
        lit.push_back(get());
        lit += digits();
      }
      if (lit == "." || lit.empty()) throw ParseError("malformed number", at);
      return QPoly::constant(parse_rational(lit));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string ident;
      while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
        ident.push_back(get());
      if (ident == "a") return QPoly::variable();
      throw ParseError("unknown identifier '" + ident + "' (only `a` is allowed)",
                       col() - static_cast<int>(ident.size()));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", col());
  }
};

}  // namespace

QPoly parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string expr_to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    if (!first)
      out += sign(c) < 0 ? " - " : " + ";
    else if (sign(c) < 0)
      out += "-";
    first = false;
    Rational av = rational_abs(c);
    bool unit = av == 1;
    if (k == 0 || !unit) {
      out += av.get_num().get_str();
      if (av.get_den() != 1) out += "/" + av.get_den().get_str();
    }
    if (k > 0) {
      if (!unit) out += "*";
      out += "a";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace hopfcert
