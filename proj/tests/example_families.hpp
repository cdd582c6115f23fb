#pragma once

// The three interval families used across the test suites, built directly
// from exact rationals.

#include "hopfcert/family.hpp"
#include "hopfcert/selector.hpp"

namespace hopfcert::testutil {

inline QPoly apoly(std::initializer_list<Rational> ascending) {
  return QPoly(std::vector<Rational>(ascending));
}

inline CoeffInterval point_coeff(const QPoly& p) { return {p, p}; }

inline CoeffInterval band_coeff(const QPoly& center, const Rational& eps) {
  return {center - QPoly::constant(eps), center + QPoly::constant(eps)};
}

// degree 4, eps = 7/25, alpha in [-2/5, 4/5]
inline IntervalFamily family_ex1() {
  Rational eps = make_rational(7, 25);
  QPoly j0 = apoly({Rational(4), Rational(0), Rational(-4)});
  QPoly j1 = apoly({Rational(0), Rational(4), Rational(-3), Rational(1)});
  QPoly j2 = apoly({Rational(5), Rational(-3), Rational(0), Rational(1)});
  QPoly j3 = apoly({Rational(0), Rational(1), Rational(1)});
  return IntervalFamily(
      {point_coeff(j0), band_coeff(j1, eps), band_coeff(j2, eps), point_coeff(j3)},
      {make_rational(-2, 5), make_rational(4, 5)});
}

inline Selector selector_ex1() {
  // (lambda^2 + a lambda + 1 + a)(lambda^2 + a^2 lambda + 4 - 4a)
  return Selector::from_factors(
      {{apoly({Rational(1), Rational(1)}), apoly({Rational(0), Rational(1)}),
        QPoly::constant(Rational(1))},
       {apoly({Rational(4), Rational(-4)}),
        apoly({Rational(0), Rational(0), Rational(1)}),
        QPoly::constant(Rational(1))}});
}

// degree 4, eps = 7/10, alpha in [-1/2, 6/5]
inline IntervalFamily family_ex2() {
  Rational eps = make_rational(7, 10);
  QPoly j0 = apoly({Rational(81), Rational(27), Rational(2)});
  QPoly j1 = apoly({Rational(0), Rational(9), Rational(11), Rational(1)});
  QPoly j2 = apoly({Rational(18), Rational(3), Rational(0), Rational(1)});
  QPoly j3 = apoly({Rational(0), Rational(1), Rational(1)});
  return IntervalFamily(
      {band_coeff(j0, eps), band_coeff(j1, eps), point_coeff(j2), band_coeff(j3, eps)},
      {make_rational(-1, 2), make_rational(6, 5)});
}

inline Selector selector_ex2() {
  // (9 + a + a lambda + lambda^2)(9 + 2a + a^2 lambda + lambda^2)
  return Selector::from_factors(
      {{apoly({Rational(9), Rational(1)}), apoly({Rational(0), Rational(1)}),
        QPoly::constant(Rational(1))},
       {apoly({Rational(9), Rational(2)}),
        apoly({Rational(0), Rational(0), Rational(1)}),
        QPoly::constant(Rational(1))}});
}

// degree 5, eps = 1, alpha in [-1/10, 9/100]
inline IntervalFamily family_ex3(Rational alpha_plus = make_rational(9, 100)) {
  Rational eps(1);
  QPoly j0 = QPoly::constant(Rational(36));
  QPoly j1 = apoly({Rational(36), Rational(36)});
  QPoly j2 = apoly({Rational(47), Rational(36)});
  QPoly j3 = apoly({Rational(37), Rational(11)});
  QPoly j4 = apoly({Rational(11), Rational(1)});
  return IntervalFamily({band_coeff(j0, eps), band_coeff(j1, eps), band_coeff(j2, eps),
                         band_coeff(j3, eps), band_coeff(j4, eps)},
                        {make_rational(-1, 10), alpha_plus});
}

inline Selector selector_ex3() {
  // (2 + lambda)(3 + lambda)(6 + lambda)(1 + a lambda + lambda^2)
  auto c = [](long v) { return QPoly::constant(Rational(v)); };
  return Selector::from_factors({{c(2), c(1)},
                                 {c(3), c(1)},
                                 {c(6), c(1)},
                                 {c(1), apoly({Rational(0), Rational(1)}), c(1)}});
}

}  // namespace hopfcert::testutil
