#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfcert {

// All certification arithmetic runs on exact arbitrary-precision rationals.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rational_abs(const Rational& q) { return abs(q); }

inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& q) { return q.get_d(); }

std::string to_string(const Rational& q);

// Exact conversion of "-3", "7/25", "0.28", "1.5e2"-free plain decimals.
// Decimal literals map to num/10^k reduced, never through binary floats.
Rational parse_rational(const std::string& text);

Rational rational_pow(const Rational& base, unsigned exp);

}  // namespace hopfcert
