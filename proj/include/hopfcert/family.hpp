#pragma once

#include <vector>

#include "hopfcert/bipoly.hpp"
#include "hopfcert/roots.hpp"

namespace hopfcert {

// One coefficient interval with endpoints depending polynomially on alpha.
struct CoeffInterval {
  QPoly lo;
  QPoly hi;

  RationalInterval at(const Rational& alpha) const {
    return {lo.eval(alpha), hi.eval(alpha)};
  }
  bool is_point() const { return lo == hi; }
};

// Monic interval polynomial at one parameter value: coeffs[k] is the interval
// of the degree-k coefficient, k = 0..n-1; the degree-n coefficient is 1.
struct FixedFamily {
  std::vector<RationalInterval> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()); }
  bool contains(const QPoly& member) const;
  // uniform bound on root moduli of all members
  Rational root_bound() const;
};

// The alpha-parameterized monic interval polynomial family.
class IntervalFamily {
 public:
  IntervalFamily(std::vector<CoeffInterval> coeffs, RationalInterval alpha_range);

  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<CoeffInterval>& coeffs() const { return coeffs_; }
  const RationalInterval& alpha_range() const { return alpha_range_; }

  FixedFamily instantiate(const Rational& alpha) const;

  // sound bound on root moduli of every member at every alpha in range
  Rational beta_bound() const;

 private:
  std::vector<CoeffInterval> coeffs_;
  RationalInterval alpha_range_;
};

// The four corner polynomials of a fixed monic interval polynomial, in lambda.
struct CornerSet {
  QPoly g1, g2, h1, h2;
};

CornerSet corners(const FixedFamily& fam);

// Corner data as exact bivariate polynomials in (alpha, beta), already
// evaluated on the imaginary axis:
//   re_g1(alpha, beta) = Re g1(Q(alpha), i beta), etc.
struct CornerBivariate {
  BiPoly re_g1, re_g2, im_h1, im_h2;
};

CornerBivariate corners_bivariate(const IntervalFamily& fam);

// W1 = Re g1 * Re g2, W2 = Im h1 * Im h2 as exact bivariate polynomials.
struct SignPair {
  BiPoly w1;
  BiPoly w2;
};

SignPair sign_pair(const IntervalFamily& fam);

// Re/Im value ranges of members at i*omega, as polynomials of omega.
// For omega >= 0: Re P(i w) ranges over [re_g1(w), re_g2(w)] and
// Im P(i w) over [im_h1(w), im_h2(w)], exactly.
struct CornerOmega {
  QPoly re_g1, re_g2, im_h1, im_h2;
};

CornerOmega corners_omega(const FixedFamily& fam);

// A member passing exactly through the value 0 at i*omega, when one exists
// (requires re_g1 <= 0 <= re_g2 and im_h1 <= 0 <= im_h2 at omega).
QPoly member_with_root_at(const FixedFamily& fam, const Rational& omega);

// uniform random member, used by the sampling oracles in tests
template <typename Rng>
QPoly random_member(const FixedFamily& fam, Rng& rng) {
  std::vector<Rational> c(fam.coeffs.size() + 1, Rational(0));
  for (size_t k = 0; k < fam.coeffs.size(); ++k) {
    Rational t = make_rational(static_cast<long>(rng() % 100001), 100000L);
    c[k] = fam.coeffs[k].lo + t * (fam.coeffs[k].hi - fam.coeffs[k].lo);
  }
  c.back() = 1;
  return QPoly(std::move(c));
}

}  // namespace hopfcert
