#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfcert/family.hpp"

namespace hopfcert {

// Root counts by half-plane, with multiplicity.
struct RootCount {
  int n_neg = 0;
  int n_imag = 0;
  int n_pos = 0;

  bool hurwitz(int degree) const { return n_neg == degree && n_imag == 0 && n_pos == 0; }
  bool operator==(const RootCount& o) const {
    return n_neg == o.n_neg && n_imag == o.n_imag && n_pos == o.n_pos;
  }
};

// Exact count of roots with Re < 0, Re = 0, Re > 0. Works over the rationals
// throughout: the imaginary-axis part is split off with the even/odd gcd and
// counted by Sturm; the remaining hyperbolic part goes through the
// Routh-Hurwitz criterion in its Cauchy-index form.
RootCount root_count(const QPoly& p);

bool is_hurwitz(const QPoly& p);

// the four Kharitonov polynomials g1+h1, g1+h2, g2+h1, g2+h2
std::vector<QPoly> kharitonov_polynomials(const FixedFamily& fam);

bool kharitonov_hurwitz(const FixedFamily& fam);

enum class CertVerdict { certified, refuted, inconclusive };

std::string to_string(CertVerdict v);

// One certified-positive factor on one omega interval.
struct ExclusionCell {
  RationalInterval span;
  int positive_factor;  // 1 for w1 = Re g1 * Re g2, 2 for w2 = Im h1 * Im h2
};

struct QInstability {
  CertVerdict verdict = CertVerdict::inconclusive;
  int q = -1;                             // valid when certified
  QPoly representative;                   // the P_o used
  std::vector<ExclusionCell> exclusion_evidence;  // covers [0, B] when certified
  Rational omega_bound;                   // the B used
  // refutation data: a rational omega and a member vanishing at i*omega
  std::optional<Rational> witness_omega;
  std::optional<QPoly> witness_member;
  // touching data for the inconclusive branch
  std::optional<RationalInterval> touch_bracket;
  std::string note;
};

// Lemma-style certification that a fixed monic interval polynomial is
// q-unstable, via the negative-cone exclusion test on w1, w2 over [0, B].
QInstability q_unstable_certify(const FixedFamily& fam, const QPoly& representative);

struct R2Result {
  CertVerdict verdict = CertVerdict::inconclusive;
  std::optional<Rational> witness_alpha;  // refutation: 0 in [a0, b0] there
  std::optional<RationalInterval> touch_bracket;
};

// (R2): 0 not in [a0(alpha), b0(alpha)] across the whole alpha range.
R2Result check_R2(const IntervalFamily& fam);

struct R3R4Result {
  QInstability minus;  // at alpha_-
  QInstability plus;   // at alpha_+
  bool certified = false;  // both certified and q1 != q2
};

R3R4Result check_R3_R4(const IntervalFamily& fam, const QPoly& rep_minus,
                       const QPoly& rep_plus);

}  // namespace hopfcert
