#pragma once

#include <vector>

#include "hopfcert/family.hpp"

namespace hopfcert {

// A concrete member P(alpha)(lambda) of the family for every alpha: the
// lambda^k coefficient is a polynomial in alpha, the leading one is 1.
struct Selector {
  std::vector<QPoly> coeffs;  // index = lambda degree

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  QPoly at(const Rational& alpha) const {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& q : coeffs) c.push_back(q.eval(alpha));
    return QPoly(std::move(c));
  }

  // expand a product of factors, each factor a dense coefficient list in
  // lambda whose entries are polynomials in alpha
  static Selector from_factors(const std::vector<std::vector<QPoly>>& factors);
};

// certified membership: lo_k(a) <= c_k(a) <= hi_k(a) across the alpha range
bool selector_in_family(const Selector& sel, const IntervalFamily& fam);

}  // namespace hopfcert
