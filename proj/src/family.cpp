#include "hopfcert/family.hpp"

#include <stdexcept>

namespace hopfcert {

bool FixedFamily::contains(const QPoly& member) const {
  if (member.degree() != degree()) return false;
  if (member.lead() != 1) return false;
  for (int k = 0; k < degree(); ++k)
    if (!coeffs[static_cast<size_t>(k)].contains(member.coeff(k))) return false;
  return true;
}

Rational FixedFamily::root_bound() const {
  Rational m(0);
  for (const auto& iv : coeffs) {
    Rational a = rational_abs(iv.lo), b = rational_abs(iv.hi);
    Rational w = a > b ? a : b;
    if (w > m) m = w;
  }
  return m + 1;
}

IntervalFamily::IntervalFamily(std::vector<CoeffInterval> coeffs,
                               RationalInterval alpha_range)
    : coeffs_(std::move(coeffs)), alpha_range_(std::move(alpha_range)) {
  if (coeffs_.empty()) throw std::invalid_argument("family of degree zero");
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    QPoly width = coeffs_[k].hi - coeffs_[k].lo;
    if (!range_nonnegative(classify_range_sign(width, alpha_range_)))
      throw std::invalid_argument("coefficient interval " + std::to_string(k) +
                                  " has lo > hi somewhere on the alpha range");
  }
}

FixedFamily IntervalFamily::instantiate(const Rational& alpha) const {
  if (!alpha_range_.contains(alpha))
    throw std::invalid_argument("alpha outside alpha_range");
  FixedFamily out;
  out.coeffs.reserve(coeffs_.size());
  for (const auto& ci : coeffs_) out.coeffs.push_back(ci.at(alpha));
  return out;
}

Rational IntervalFamily::beta_bound() const {
  Rational m(0);
  for (const auto& ci : coeffs_) {
    for (const QPoly* e : {&ci.lo, &ci.hi}) {
      RationalInterval r = range_enclosure(*e, alpha_range_);
      Rational a = rational_abs(r.lo), b = rational_abs(r.hi);
      Rational w = a > b ? a : b;
      if (w > m) m = w;
    }
  }
  return m + 1;
}

namespace {

// corner endpoint choice per Kharitonov: which == 0 picks g1/h1, 1 picks g2/h2
Rational pick_fixed(const RationalInterval& iv, int degree, int which) {
  bool lower;
  int m = degree % 4;
  if (m == 0 || m == 1)
    lower = which == 0;
  else
    lower = which == 1;
  return lower ? iv.lo : iv.hi;
}

const QPoly& pick_sym(const CoeffInterval& ci, int degree, int which) {
  bool lower;
  int m = degree % 4;
  if (m == 0 || m == 1)
    lower = which == 0;
  else
    lower = which == 1;
  return lower ? ci.lo : ci.hi;
}

}  // namespace

CornerSet corners(const FixedFamily& fam) {
  int n = fam.degree();
  std::vector<Rational> g1(static_cast<size_t>(n) + 1, Rational(0));
  std::vector<Rational> g2 = g1, h1 = g1, h2 = g1;
  for (int k = 0; k <= n; ++k) {
    RationalInterval iv = k == n ? RationalInterval::point(Rational(1))
                                 : fam.coeffs[static_cast<size_t>(k)];
    if (k % 2 == 0) {
      g1[static_cast<size_t>(k)] = pick_fixed(iv, k, 0);
      g2[static_cast<size_t>(k)] = pick_fixed(iv, k, 1);
    } else {
      h1[static_cast<size_t>(k)] = pick_fixed(iv, k, 0);
      h2[static_cast<size_t>(k)] = pick_fixed(iv, k, 1);
    }
  }
  return {QPoly(std::move(g1)), QPoly(std::move(g2)), QPoly(std::move(h1)),
          QPoly(std::move(h2))};
}

CornerOmega corners_omega(const FixedFamily& fam) {
  CornerSet cs = corners(fam);
  return {re_of_i_omega(cs.g1), re_of_i_omega(cs.g2), im_of_i_omega(cs.h1),
          im_of_i_omega(cs.h2)};
}

CornerBivariate corners_bivariate(const IntervalFamily& fam) {
  int n = fam.degree();
  CornerBivariate out;
  const QPoly one = QPoly::constant(Rational(1));
  for (int k = 0; k <= n; ++k) {
    const CoeffInterval point{one, one};
    const CoeffInterval& ci =
        k == n ? point : fam.coeffs()[static_cast<size_t>(k)];
    if (k % 2 == 0) {
      // lambda^k |-> (-1)^{k/2} beta^k on the real part
      Rational s((k / 2) % 2 == 0 ? 1 : -1);
      out.re_g1 += BiPoly::from_alpha_poly(s * pick_sym(ci, k, 0), k);
      out.re_g2 += BiPoly::from_alpha_poly(s * pick_sym(ci, k, 1), k);
    } else {
      Rational s(((k - 1) / 2) % 2 == 0 ? 1 : -1);
      out.im_h1 += BiPoly::from_alpha_poly(s * pick_sym(ci, k, 0), k);
      out.im_h2 += BiPoly::from_alpha_poly(s * pick_sym(ci, k, 1), k);
    }
  }
  return out;
}

SignPair sign_pair(const IntervalFamily& fam) {
  CornerBivariate cb = corners_bivariate(fam);
  return {cb.re_g1 * cb.re_g2, cb.im_h1 * cb.im_h2};
}

QPoly member_with_root_at(const FixedFamily& fam, const Rational& omega) {
  CornerOmega co = corners_omega(fam);
  Rational r1 = co.re_g1.eval(omega), r2 = co.re_g2.eval(omega);
  Rational i1 = co.im_h1.eval(omega), i2 = co.im_h2.eval(omega);
  if (!(r1 <= 0 && 0 <= r2 && i1 <= 0 && 0 <= i2))
    throw std::invalid_argument("no member vanishes at i*omega");
  Rational t_even = r2 == r1 ? Rational(0) : r2 / (r2 - r1);  // weight of g1 pick
  Rational t_odd = i2 == i1 ? Rational(0) : i2 / (i2 - i1);
  int n = fam.degree();
  std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
  c.back() = 1;
  for (int k = 0; k < n; ++k) {
    const RationalInterval& iv = fam.coeffs[static_cast<size_t>(k)];
    const Rational& t = k % 2 == 0 ? t_even : t_odd;
    Rational lo_pick = pick_fixed(iv, k, 0), hi_pick = pick_fixed(iv, k, 1);
    c[static_cast<size_t>(k)] = t * lo_pick + (1 - t) * hi_pick;
  }
  QPoly member{std::move(c)};
  // sanity: the construction really zeroes both parts
  if (re_of_i_omega(member).eval(omega) != 0 ||
      im_of_i_omega(member).eval(omega) != 0)
    throw std::logic_error("member construction failed");
  return member;
}

}  // namespace hopfcert

#include "hopfcert/selector.hpp"

namespace hopfcert {

Selector Selector::from_factors(const std::vector<std::vector<QPoly>>& factors) {
  if (factors.empty()) throw std::invalid_argument("selector needs at least one factor");
  // polynomials in lambda with QPoly-in-alpha coefficients, multiplied naively
  std::vector<QPoly> acc{QPoly::constant(Rational(1))};
  for (const auto& f : factors) {
    if (f.empty()) throw std::invalid_argument("empty selector factor");
    std::vector<QPoly> next(acc.size() + f.size() - 1);
    for (size_t i = 0; i < acc.size(); ++i)
      for (size_t j = 0; j < f.size(); ++j) next[i + j] += acc[i] * f[j];
    acc = std::move(next);
  }
  while (!acc.empty() && acc.back().is_zero()) acc.pop_back();
  return Selector{std::move(acc)};
}

bool selector_in_family(const Selector& sel, const IntervalFamily& fam) {
  if (sel.degree() != fam.degree()) return false;
  if (!(sel.coeffs.back() == QPoly::constant(Rational(1)))) return false;
  for (int k = 0; k < fam.degree(); ++k) {
    const CoeffInterval& ci = fam.coeffs()[static_cast<size_t>(k)];
    const QPoly& c = sel.coeffs[static_cast<size_t>(k)];
    if (!range_nonnegative(classify_range_sign(c - ci.lo, fam.alpha_range())))
      return false;
    if (!range_nonnegative(classify_range_sign(ci.hi - c, fam.alpha_range())))
      return false;
  }
  return true;
}

}  // namespace hopfcert
