#include "hopfcert/rational.hpp"

#include <cctype>

namespace hopfcert {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_unsigned(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("bad rational literal: " + s);
    Rational r{Integer(num), Integer(den)};
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot);
    std::string fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (fp.empty()) fp = "0";
    if (!all_digits(ip) || !all_digits(fp))
      throw std::invalid_argument("bad decimal literal: " + s);
    Integer scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    Rational r(Integer(ip) * scale + Integer(fp), scale);
    r.canonicalize();
    return r;
  }
  if (!all_digits(s)) throw std::invalid_argument("bad integer literal: " + s);
  return Rational(Integer(s));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    s.erase(s.begin());
  }
  Rational r = parse_unsigned(s);
  return neg ? Rational(-r) : r;
}

Rational rational_pow(const Rational& base, unsigned exp) {
  Rational out(1);
  Rational b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1u) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

}  // namespace hopfcert
