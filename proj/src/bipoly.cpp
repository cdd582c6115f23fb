#include "hopfcert/bipoly.hpp"

#include <sstream>

namespace hopfcert {

void BiPoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

BiPoly BiPoly::constant(const Rational& v) {
  if (v == 0) return BiPoly();
  return BiPoly(std::vector<QPoly>{QPoly::constant(v)});
}

BiPoly BiPoly::from_alpha_poly(const QPoly& p, int beta_degree) {
  if (p.is_zero()) return BiPoly();
  std::vector<QPoly> rows(static_cast<size_t>(beta_degree) + 1);
  rows.back() = p;
  return BiPoly(std::move(rows));
}

bool BiPoly::is_zero() const { return rows_.empty(); }

int BiPoly::alpha_degree() const {
  int d = -1;
  for (const auto& r : rows_) d = std::max(d, r.degree());
  return d;
}

int BiPoly::beta_degree() const { return static_cast<int>(rows_.size()) - 1; }

Rational BiPoly::coeff(int i, int j) const {
  if (j < 0 || j >= static_cast<int>(rows_.size())) return Rational(0);
  return rows_[static_cast<size_t>(j)].coeff(i);
}

void BiPoly::set_coeff(int i, int j, const Rational& v) {
  if (j >= static_cast<int>(rows_.size())) rows_.resize(static_cast<size_t>(j) + 1);
  QPoly& row = rows_[static_cast<size_t>(j)];
  std::vector<Rational> c = row.coeffs();
  if (i >= static_cast<int>(c.size())) c.resize(static_cast<size_t>(i) + 1, Rational(0));
  c[static_cast<size_t>(i)] = v;
  row = QPoly(std::move(c));
  trim();
}

Rational BiPoly::eval(const Rational& alpha, const Rational& beta) const {
  Rational acc(0);
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    acc = acc * beta + it->eval(alpha);
  return acc;
}

double BiPoly::eval_double(double alpha, double beta) const {
  double acc = 0.0;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    double row = 0.0;
    for (auto ct = it->coeffs().rbegin(); ct != it->coeffs().rend(); ++ct)
      row = row * alpha + to_double(*ct);
    acc = acc * beta + row;
  }
  return acc;
}

QPoly BiPoly::at_alpha(const Rational& alpha) const {
  std::vector<Rational> c;
  c.reserve(rows_.size());
  for (const auto& r : rows_) c.push_back(r.eval(alpha));
  return QPoly(std::move(c));
}

QPoly BiPoly::at_beta(const Rational& beta) const {
  QPoly acc;
  Rational pw(1);
  for (const auto& r : rows_) {
    acc += pw * r;
    pw *= beta;
  }
  return acc;
}

BiPoly BiPoly::scale_beta(const Rational& c) const {
  std::vector<QPoly> rows(rows_);
  Rational pw(1);
  for (auto& r : rows) {
    r = pw * r;
    pw *= c;
  }
  return BiPoly(std::move(rows));
}

QPoly BiPoly::compose_path(const QPoly& a, const QPoly& b) const {
  QPoly acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    acc = acc * b;
    acc += compose(*it, a);
  }
  return acc;
}

RationalInterval range_enclosure(const QPoly& p, const RationalInterval& domain) {
  RationalInterval acc = RationalInterval::point(Rational(0));
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
    acc = acc * domain + RationalInterval::point(*it);
  return acc;
}

RationalInterval BiPoly::box_range(const Box2& box) const {
  RationalInterval acc = RationalInterval::point(Rational(0));
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    acc = acc * box.beta + range_enclosure(*it, box.alpha);
  return acc;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (size_t j = 0; j < o.rows_.size(); ++j) rows_[j] += o.rows_[j];
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<QPoly> rows(a.rows_.size() + b.rows_.size() - 1);
  for (size_t i = 0; i < a.rows_.size(); ++i)
    for (size_t j = 0; j < b.rows_.size(); ++j)
      rows[i + j] += a.rows_[i] * b.rows_[j];
  return BiPoly(std::move(rows));
}

BiPoly operator-(const BiPoly& a) {
  std::vector<QPoly> rows(a.rows_);
  for (auto& r : rows) r = -r;
  return BiPoly(std::move(rows));
}

std::string to_string(const BiPoly& p, const std::string& va, const std::string& vb) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= p.beta_degree(); ++j) {
    const QPoly row = p.beta_rows()[static_cast<size_t>(j)];
    if (row.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(row, va) << ")";
    if (j > 0) {
      os << "*" << vb;
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

}  // namespace hopfcert
