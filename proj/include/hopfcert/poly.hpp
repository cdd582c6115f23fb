#pragma once

#include <algorithm>
#include <cassert>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfcert/rational.hpp"

namespace hopfcert {

// Dense univariate polynomial, coefficient index = degree.
// Scalar is Rational on every certification path; double only in the
// float-grade validator code.
template <typename S>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly constant(const S& v) { return Poly(std::vector<S>{v}); }
  static Poly variable() { return Poly(std::vector<S>{S(0), S(1)}); }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1 by convention
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  S coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return S(0);
    return c_[static_cast<size_t>(k)];
  }
  const std::vector<S>& coeffs() const { return c_; }

  S lead() const {
    if (c_.empty()) throw std::logic_error("lead of zero polynomial");
    return c_.back();
  }

  S eval(const S& x) const {
    S acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
  }
  std::vector<S> c_;
};

using QPoly = Poly<Rational>;
using DPoly = Poly<double>;

template <typename S>
Poly<S> operator+(Poly<S> a, const Poly<S>& b) {
  a += b;
  return a;
}

template <typename S>
Poly<S> operator-(Poly<S> a, const Poly<S>& b) {
  a -= b;
  return a;
}

template <typename S>
Poly<S> operator-(const Poly<S>& a) {
  std::vector<S> c(a.coeffs());
  for (auto& v : c) v = -v;
  return Poly<S>(std::move(c));
}

template <typename S>
Poly<S> operator*(const Poly<S>& a, const Poly<S>& b) {
  if (a.is_zero() || b.is_zero()) return Poly<S>();
  std::vector<S> c(a.coeffs().size() + b.coeffs().size() - 1, S(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i)
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Poly<S>(std::move(c));
}

template <typename S>
Poly<S> operator*(const S& s, const Poly<S>& p) {
  std::vector<S> c(p.coeffs());
  for (auto& v : c) v = s * v;
  return Poly<S>(std::move(c));
}

template <typename S>
Poly<S> derivative(const Poly<S>& p) {
  if (p.degree() <= 0) return Poly<S>();
  std::vector<S> c(static_cast<size_t>(p.degree()), S(0));
  for (int k = 1; k <= p.degree(); ++k)
    c[static_cast<size_t>(k - 1)] = S(k) * p.coeff(k);
  return Poly<S>(std::move(c));
}

// p(c * x)
template <typename S>
Poly<S> scale_argument(const Poly<S>& p, const S& c) {
  std::vector<S> out(p.coeffs());
  S f(1);
  for (size_t k = 0; k < out.size(); ++k) {
    out[k] *= f;
    f *= c;
  }
  return Poly<S>(std::move(out));
}

// p(q(x)) by Horner in q
template <typename S>
Poly<S> compose(const Poly<S>& p, const Poly<S>& q) {
  Poly<S> acc;
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * q;
    acc += Poly<S>::constant(p.coeff(k));
  }
  return acc;
}

template <typename S>
Poly<S> poly_pow(const Poly<S>& p, unsigned e) {
  Poly<S> out = Poly<S>::constant(S(1));
  Poly<S> b = p;
  while (e > 0) {
    if (e & 1u) out = out * b;
    b = b * b;
    e >>= 1;
  }
  return out;
}

QPoly monic(const QPoly& p);

// quotient/remainder over the rationals
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
// division that must be exact; throws if a remainder appears
QPoly divexact(const QPoly& a, const QPoly& b);

// monic gcd via primitive-part Euclid (keeps coefficient growth tame)
QPoly poly_gcd(QPoly a, QPoly b);

// p / gcd(p, p')
QPoly squarefree_part(const QPoly& p);

// Yun decomposition: returns {(factor, multiplicity)}, factors monic,
// squarefree and pairwise coprime; product of factor^mult = monic(p).
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p);

std::string to_string(const QPoly& p, const std::string& var = "x");

inline DPoly to_double_poly(const QPoly& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(to_double(q));
  return DPoly(std::move(c));
}

inline std::complex<double> eval_complex(const DPoly& p, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

}  // namespace hopfcert
