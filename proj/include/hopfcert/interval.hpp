#pragma once

#include <stdexcept>
#include <string>

#include "hopfcert/rational.hpp"

namespace hopfcert {

// Closed interval [lo, hi] with exact rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  RationalInterval() : lo(0), hi(0) {}
  RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("interval with lo > hi");
  }
  static RationalInterval point(const Rational& v) { return {v, v}; }

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool strictly_positive() const { return lo > 0; }
  bool strictly_negative() const { return hi < 0; }
  bool nonpositive() const { return hi <= 0; }
  bool nonnegative() const { return lo >= 0; }
  bool contains_interval(const RationalInterval& o) const {
    return lo <= o.lo && o.hi <= hi;
  }
  bool intersects(const RationalInterval& o) const {
    return lo <= o.hi && o.lo <= hi;
  }
  bool operator==(const RationalInterval& o) const { return lo == o.lo && hi == o.hi; }
  bool operator!=(const RationalInterval& o) const { return !(*this == o); }
};

inline RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

inline RationalInterval operator-(const RationalInterval& a) { return {-a.hi, -a.lo}; }

inline RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return a + (-b);
}

inline RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rational lo = p1, hi = p1;
  for (const Rational* p : {&p2, &p3, &p4}) {
    if (*p < lo) lo = *p;
    if (*p > hi) hi = *p;
  }
  return {lo, hi};
}

// Scalar multiple: sign of c decides whether endpoints swap.
inline RationalInterval scale(const RationalInterval& a, const Rational& c) {
  if (sign(c) >= 0) return {c * a.lo, c * a.hi};
  return {c * a.hi, c * a.lo};
}

inline RationalInterval hull(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi};
}

inline std::string to_string(const RationalInterval& iv) {
  return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]";
}

// Axis-aligned parameter box; beta is restricted to the closed upper half-plane.
struct Box2 {
  RationalInterval alpha;
  RationalInterval beta;

  Box2(RationalInterval a, RationalInterval b)
      : alpha(std::move(a)), beta(std::move(b)) {
    if (sign(beta.lo) < 0) throw std::invalid_argument("box with beta < 0");
  }
};

inline std::string to_string(const Box2& b) {
  return to_string(b.alpha) + " x " + to_string(b.beta);
}

}  // namespace hopfcert
