#include "hopfcert/poly.hpp"

namespace hopfcert {

QPoly monic(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("monic of zero polynomial");
  Rational inv = Rational(1) / p.lead();
  return inv * p;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (a.degree() < b.degree()) return {QPoly(), a};
  std::vector<Rational> rem(a.coeffs());
  std::vector<Rational> quo(static_cast<size_t>(a.degree() - b.degree() + 1), Rational(0));
  const Rational lead_inv = Rational(1) / b.lead();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rational q = rem[static_cast<size_t>(k + b.degree())] * lead_inv;
    quo[static_cast<size_t>(k)] = q;
    if (q != 0) {
      for (int j = 0; j <= b.degree(); ++j)
        rem[static_cast<size_t>(k + j)] -= q * b.coeff(j);
    }
  }
  rem.resize(static_cast<size_t>(std::max(b.degree(), 0)));
  return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly divexact(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("divexact with nonzero remainder");
  return q;
}

namespace {

// Scale by a positive rational so coefficients become a primitive integer
// vector. Positive scaling preserves signs everywhere, which the Sturm and
// Cauchy-index machinery relies on.
QPoly primitive_positive(const QPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) return p;
  Rational factor = make_rational(den_lcm, num_gcd);
  return factor * p;
}

}  // namespace

QPoly poly_gcd(QPoly a, QPoly b) {
  if (a.is_zero()) return b.is_zero() ? b : monic(b);
  if (b.is_zero()) return monic(a);
  a = primitive_positive(a);
  b = primitive_positive(b);
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = primitive_positive(r);
  }
  return monic(a);
}

QPoly squarefree_part(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
  if (p.degree() == 0) return QPoly::constant(Rational(1));
  QPoly g = poly_gcd(p, derivative(p));
  if (g.degree() == 0) return monic(p);
  return monic(divexact(p, g));
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<std::pair<QPoly, int>> out;
  QPoly f = monic(p);
  if (f.degree() == 0) return out;
  QPoly fp = derivative(f);
  QPoly g = poly_gcd(f, fp);
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  // Yun's algorithm
  QPoly w = divexact(f, g);
  QPoly y = divexact(fp, g);
  QPoly z = y - derivative(w);
  int i = 1;
  while (w.degree() > 0) {
    QPoly ai = poly_gcd(w, z);
    if (ai.degree() > 0) out.emplace_back(ai, i);
    w = divexact(w, ai);
    y = divexact(z, ai);
    z = y - derivative(w);
    ++i;
  }
  return out;
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    if (!first) os << (sign(c) < 0 ? " - " : " + ");
    else if (sign(c) < 0) os << "-";
    first = false;
    Rational a = rational_abs(c);
    bool unit = (a == 1);
    if (k == 0 || !unit) os << to_string(a);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace hopfcert
