#pragma once

#include <vector>

#include "hopfcert/interval.hpp"
#include "hopfcert/poly.hpp"

namespace hopfcert {

// Dense bivariate polynomial in (alpha, beta) with exact rational
// coefficients: coefficient of alpha^i beta^j sits at (i, j).
class BiPoly {
 public:
  BiPoly() = default;

  static BiPoly zero() { return BiPoly(); }
  static BiPoly constant(const Rational& v);
  // embeds a polynomial in alpha as the beta^j row
  static BiPoly from_alpha_poly(const QPoly& p, int beta_degree = 0);

  bool is_zero() const;
  int alpha_degree() const;
  int beta_degree() const;

  Rational coeff(int i, int j) const;
  void set_coeff(int i, int j, const Rational& v);

  Rational eval(const Rational& alpha, const Rational& beta) const;
  double eval_double(double alpha, double beta) const;

  // fix one variable, exact
  QPoly at_alpha(const Rational& alpha) const;  // polynomial in beta
  QPoly at_beta(const Rational& beta) const;    // polynomial in alpha

  // p(alpha, c * beta)
  BiPoly scale_beta(const Rational& c) const;

  // substitute alpha = a(t), beta = b(t); exact univariate result
  QPoly compose_path(const QPoly& a, const QPoly& b) const;

  // sound interval-Horner range enclosure over a box
  RationalInterval box_range(const Box2& box) const;

  BiPoly& operator+=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) {
    a += b;
    return a;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a);
  bool operator==(const BiPoly& o) const { return rows_ == o.rows_; }

  // rows_[j] = coefficient polynomial in alpha of beta^j
  const std::vector<QPoly>& beta_rows() const { return rows_; }

 private:
  explicit BiPoly(std::vector<QPoly> rows) : rows_(std::move(rows)) { trim(); }
  void trim();
  std::vector<QPoly> rows_;
};

std::string to_string(const BiPoly& p, const std::string& va = "a",
                      const std::string& vb = "b");

// interval-Horner enclosure for a univariate polynomial over an interval
RationalInterval range_enclosure(const QPoly& p, const RationalInterval& domain);

}  // namespace hopfcert
