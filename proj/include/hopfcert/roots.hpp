#pragma once

#include <optional>
#include <vector>

#include "hopfcert/interval.hpp"
#include "hopfcert/poly.hpp"

namespace hopfcert {

// 1 + max_k |c_k| / |c_n|: every complex root has modulus <= bound.
Rational cauchy_bound(const QPoly& p);

struct SturmChain {
  std::vector<QPoly> seq;
};

SturmChain sturm_chain(const QPoly& p);
int variations_at(const SturmChain& chain, const Rational& x);
int variations_at_infinity(const SturmChain& chain, bool positive);

// Distinct real roots of a squarefree polynomial, whole line / half-open (a, b].
int count_real_roots(const QPoly& squarefree);
int count_real_roots(const QPoly& squarefree, const Rational& a, const Rational& b);

struct RootIsolation {
  // exact rational roots found, increasing
  std::vector<Rational> exact;
  // disjoint brackets, each containing exactly one real root in its interior;
  // bracket endpoints are never roots
  std::vector<RationalInterval> brackets;

  size_t count() const { return exact.size() + brackets.size(); }
};

// Isolates the distinct real roots of p inside the closed domain.
RootIsolation isolate_real_roots(const QPoly& p, const RationalInterval& domain);

// Shrinks an isolation bracket (one simple root of `squarefree` inside,
// endpoints of opposite sign) below the requested width.
RationalInterval refine_bracket(const QPoly& squarefree, RationalInterval bracket,
                                const Rational& max_width);

enum class SignVerdict { strictly_positive, strictly_negative, has_zero, mixed };

enum class RangeSign {
  positive,            // p > 0 on the whole domain
  negative,            // p < 0
  nonneg_with_zero,    // p >= 0, vanishing somewhere
  nonpos_with_zero,    // p <= 0, vanishing somewhere
  zero,                // p == 0 on the domain
  mixed                // takes both strict signs
};

RangeSign classify_range_sign(const QPoly& p, const RationalInterval& domain);
SignVerdict sign_on_interval(const QPoly& p, const RationalInterval& domain);

inline bool range_nonnegative(RangeSign s) {
  return s == RangeSign::positive || s == RangeSign::nonneg_with_zero ||
         s == RangeSign::zero;
}
inline bool range_nonpositive(RangeSign s) {
  return s == RangeSign::negative || s == RangeSign::nonpos_with_zero ||
         s == RangeSign::zero;
}

// Exact decision for { x in domain : f(x) <= 0 and g(x) <= 0 }.
struct JointNonpositive {
  enum class Verdict {
    empty,     // the set is empty (certified)
    witness,   // nonempty at the returned rational point
    touching   // nonempty, but only at isolated irrational points; an
               // enclosing bracket of one such point is returned
  };
  Verdict verdict = Verdict::empty;
  Rational witness_point;
  RationalInterval touch_bracket;
};

JointNonpositive joint_nonpositive(const QPoly& f, const QPoly& g,
                                   const RationalInterval& domain);

// Cauchy index of g/f over the whole real line (signed remainder sequence).
int cauchy_index(const QPoly& f, const QPoly& g);

// Parity split of p(i*omega) into real polynomials of omega:
//   p(i*omega) = re_of_i_omega(p)(omega) + i * im_of_i_omega(p)(omega).
QPoly re_of_i_omega(const QPoly& p);
QPoly im_of_i_omega(const QPoly& p);

}  // namespace hopfcert
