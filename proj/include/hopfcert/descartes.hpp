#pragma once

#include <optional>
#include <string>

#include "hopfcert/family.hpp"
#include "hopfcert/stability.hpp"

namespace hopfcert {

// Interval polynomial in omega with fixed rational endpoints.
struct IntervalPoly {
  std::vector<RationalInterval> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  RationalInterval coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs.size()))
      return RationalInterval::point(Rational(0));
    return coeffs[static_cast<size_t>(k)];
  }
};

// Interval polynomial in omega whose endpoints are polynomials in alpha.
struct SymIntervalPoly {
  std::vector<CoeffInterval> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  IntervalPoly at(const Rational& alpha) const {
    IntervalPoly out;
    out.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) out.coeffs.push_back(c.at(alpha));
    return out;
  }
};

// Parity split of a fixed interval polynomial on the imaginary axis:
// coefficient k contributes to Re for even k and to Im for odd k, with the
// sign (-1)^floor(k/2); negation swaps interval endpoints.
std::pair<IntervalPoly, IntervalPoly> re_im_parts(const FixedFamily& fam);
std::pair<SymIntervalPoly, SymIntervalPoly> re_im_parts(const IntervalFamily& fam);

// T(S, Q, R)(w) = Q(w) Re(S(iw)) + R(w) Im(S(iw)) in interval arithmetic.
IntervalPoly combine_T(const FixedFamily& fam, const QPoly& q, const QPoly& r);
SymIntervalPoly combine_T(const IntervalFamily& fam, const QPoly& q, const QPoly& r);

struct SignChangeVerdict {
  bool at_most_one = false;
  int pivot = -1;                       // original coefficient index when true
  std::pair<int, int> violating{-1, -1};  // incompatible index pair when false
};

SignChangeVerdict count_sign_changes(const IntervalPoly& p);

struct R5DescartesResult {
  CertVerdict verdict = CertVerdict::inconclusive;  // certified or inconclusive
  SymIntervalPoly T;
  SignChangeVerdict pattern;
  int offending_degree = -1;
  std::optional<RationalInterval> offending_alpha;
  std::string note;
};

// (R5'''): the symbolic T keeps a one-sign-change pattern uniformly in alpha.
R5DescartesResult check_R5ppp(const IntervalFamily& fam, const QPoly& q,
                              const QPoly& r);

struct FixedDescartesResult {
  bool at_most_one_pair = false;
  int sign_changes = 0;
  QPoly combined;  // S(P, Q, R)
};

// Descartes bound on one fixed polynomial.
FixedDescartesResult check_fixed_descartes(const QPoly& p, const QPoly& q,
                                           const QPoly& r);

}  // namespace hopfcert
