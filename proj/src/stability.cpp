#include "hopfcert/stability.hpp"

#include <cassert>
#include <stdexcept>

namespace hopfcert {

namespace {

// p real with even part A (only even degrees) and odd part B: rebuild q with
// Re q(i w) = A(w), Im q(i w) = B(w).
QPoly recombine(const QPoly& even, const QPoly& odd) {
  int n = std::max(even.degree(), odd.degree());
  if (n < 0) return QPoly();
  std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
  for (int k = 0; k <= n; k += 2) {
    Rational v = even.coeff(k);
    if ((k / 2) % 2 == 1) v = -v;
    c[static_cast<size_t>(k)] = v;
  }
  for (int k = 1; k <= n; k += 2) {
    Rational v = odd.coeff(k);
    if (((k - 1) / 2) % 2 == 1) v = -v;
    c[static_cast<size_t>(k)] = v;
  }
  return QPoly(std::move(c));
}

bool pure_parity(const QPoly& p, int parity) {
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(k) != 0 && k % 2 != parity) return false;
  return true;
}

// real roots with multiplicity over the whole line
int real_roots_with_multiplicity(const QPoly& p) {
  int total = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(p))
    total += mult * count_real_roots(factor);
  return total;
}

// open right-half-plane roots of a polynomial with no imaginary roots
int rhp_roots_hyperbolic(const QPoly& q) {
  int n = q.degree();
  if (n <= 0) return 0;
  QPoly a = re_of_i_omega(q);
  QPoly b = im_of_i_omega(q);
  int idx, npos2;
  if (n % 2 == 0) {
    idx = cauchy_index(a, b);
    npos2 = n + idx;
  } else {
    idx = cauchy_index(b, a);
    npos2 = n - idx;
  }
  if (npos2 % 2 != 0) throw std::logic_error("cauchy index parity violation");
  int npos = npos2 / 2;
  if (npos < 0 || npos > n) throw std::logic_error("cauchy index out of range");
  return npos;
}

}  // namespace

RootCount root_count(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  RootCount rc;
  int n = p.degree();
  if (n == 0) return rc;
  QPoly m = monic(p);
  QPoly re = re_of_i_omega(m);
  QPoly im = im_of_i_omega(m);
  QPoly r = im.is_zero() ? monic(re) : (re.is_zero() ? monic(im) : poly_gcd(re, im));

  int n_imag = 0, sym_pairs = 0;
  QPoly q;
  if (r.degree() > 0) {
    n_imag = real_roots_with_multiplicity(r);
    if ((r.degree() - n_imag) % 2 != 0)
      throw std::logic_error("gcd split parity violation");
    sym_pairs = (r.degree() - n_imag) / 2;
    QPoly re1 = divexact(re, r);
    QPoly im1 = im.is_zero() ? QPoly() : divexact(im, r);
    if (pure_parity(r, 0)) {
      q = recombine(re1, im1);
    } else if (pure_parity(r, 1)) {
      // r odd: re1 is odd, im1 even; i*(re1 + i*im1) has parts (-im1, re1)
      q = recombine(-im1, re1);
    } else {
      throw std::logic_error("gcd of even/odd split lost parity");
    }
    if (q.degree() + r.degree() != n)
      throw std::logic_error("imaginary-part deflation degree mismatch");
  } else {
    q = m;
  }

  rc.n_imag = n_imag;
  rc.n_pos = sym_pairs + rhp_roots_hyperbolic(q);
  rc.n_neg = n - rc.n_imag - rc.n_pos;
  if (rc.n_neg < 0) throw std::logic_error("negative root count");
  return rc;
}

bool is_hurwitz(const QPoly& p) {
  RootCount rc = root_count(p);
  return rc.hurwitz(p.degree());
}

std::vector<QPoly> kharitonov_polynomials(const FixedFamily& fam) {
  CornerSet cs = corners(fam);
  return {cs.g1 + cs.h1, cs.g1 + cs.h2, cs.g2 + cs.h1, cs.g2 + cs.h2};
}

bool kharitonov_hurwitz(const FixedFamily& fam) {
  for (const QPoly& k : kharitonov_polynomials(fam))
    if (!is_hurwitz(k)) return false;
  return true;
}

std::string to_string(CertVerdict v) {
  switch (v) {
    case CertVerdict::certified:
      return "certified";
    case CertVerdict::refuted:
      return "refuted";
    default:
      return "inconclusive";
  }
}

namespace {

// Cover [0, B] by cells on which w1 or w2 is strictly positive. Returns an
// empty vector if no such cover exists (then the cone test cannot certify).
std::vector<ExclusionCell> build_exclusion_cover(const QPoly& u1, const QPoly& u2,
                                                 const Rational& bound) {
  RationalInterval domain{Rational(0), bound};
  struct Hole {
    RationalInterval span;
    bool exact;
    int owner;  // 1 or 2
  };
  std::vector<Hole> holes;
  QPoly sq1 = u1.degree() > 0 ? squarefree_part(u1) : QPoly::constant(Rational(1));
  QPoly sq2 = u2.degree() > 0 ? squarefree_part(u2) : QPoly::constant(Rational(1));
  int idx = 1;
  for (const QPoly* u : {&u1, &u2}) {
    if (u->degree() > 0) {
      RootIsolation iso = isolate_real_roots(*u, domain);
      for (const Rational& r : iso.exact)
        holes.push_back({RationalInterval::point(r), true, idx});
      for (const auto& br : iso.brackets) holes.push_back({br, false, idx});
    }
    ++idx;
  }
  // shrink brackets until pairwise disjoint (common roots were excluded by the
  // joint emptiness test that precedes this cover construction)
  bool again = true;
  int guard = 0;
  while (again && ++guard < 400) {
    again = false;
    for (auto& h : holes) {
      if (h.exact) continue;
      bool bad = false;
      for (const auto& o : holes) {
        if (&o == &h) continue;
        if (o.exact) {
          if (h.span.lo < o.span.lo && o.span.lo < h.span.hi) bad = true;
        } else if (h.span.intersects(o.span)) {
          bad = true;
        }
      }
      if (bad) {
        const QPoly& sq = h.owner == 1 ? sq1 : sq2;
        h.span = refine_bracket(sq, h.span, h.span.width() / 4);
        again = true;
      }
    }
  }
  if (guard >= 400) return {};
  std::sort(holes.begin(), holes.end(),
            [](const Hole& a, const Hole& b) { return a.span.lo < b.span.lo; });

  // pieces: alternating gap / hole segments across [0, B]
  std::vector<RationalInterval> pieces;
  Rational cursor = domain.lo;
  for (const auto& h : holes) {
    Rational a = h.span.lo < domain.lo ? domain.lo : h.span.lo;
    Rational b = h.span.hi > domain.hi ? domain.hi : h.span.hi;
    if (cursor < a) pieces.emplace_back(cursor, a);
    if (a <= b && b > cursor) pieces.emplace_back(a < cursor ? cursor : a, b);
    else if (a == b && a >= cursor) pieces.emplace_back(a, b);
    cursor = b > cursor ? b : cursor;
  }
  if (cursor < domain.hi) pieces.emplace_back(cursor, domain.hi);

  std::vector<ExclusionCell> cells;
  for (const auto& piece : pieces) {
    bool labeled = false;
    int idx = 1;
    for (const QPoly* u : {&u1, &u2}) {
      if (classify_range_sign(*u, piece) == RangeSign::positive) {
        cells.push_back({piece, idx});
        labeled = true;
        break;
      }
      ++idx;
    }
    if (!labeled) return {};
  }
  // merge adjacent cells with the same label
  std::vector<ExclusionCell> out;
  for (const auto& c : cells) {
    if (!out.empty() && out.back().positive_factor == c.positive_factor &&
        out.back().span.hi == c.span.lo)
      out.back().span = hull(out.back().span, c.span);
    else
      out.push_back(c);
  }
  return out;
}

}  // namespace

QInstability q_unstable_certify(const FixedFamily& fam, const QPoly& representative) {
  if (!fam.contains(representative))
    throw std::invalid_argument("representative not in family");
  RootCount rc = root_count(representative);
  if (rc.n_imag != 0)
    throw std::invalid_argument("representative must have no imaginary roots");

  QInstability out;
  out.representative = representative;
  CornerOmega co = corners_omega(fam);
  QPoly u1 = co.re_g1 * co.re_g2;
  QPoly u2 = co.im_h1 * co.im_h2;
  Rational bound = fam.root_bound();
  out.omega_bound = bound;

  JointNonpositive jn = joint_nonpositive(u1, u2, {Rational(0), bound});
  switch (jn.verdict) {
    case JointNonpositive::Verdict::empty: {
      out.verdict = CertVerdict::certified;
      out.q = rc.n_pos;
      out.exclusion_evidence = build_exclusion_cover(u1, u2, bound);
      if (out.exclusion_evidence.empty())
        throw std::logic_error("empty cone overlap but no exclusion cover");
      break;
    }
    case JointNonpositive::Verdict::witness: {
      out.verdict = CertVerdict::refuted;
      out.witness_omega = jn.witness_point;
      out.witness_member = member_with_root_at(fam, jn.witness_point);
      out.note = "a member of the family has the purely imaginary root i*omega";
      break;
    }
    case JointNonpositive::Verdict::touching: {
      out.verdict = CertVerdict::inconclusive;
      out.touch_bracket = jn.touch_bracket;
      out.note =
          "the (w1, w2) curve touches the negative cone; no rational "
          "member-root witness was constructed (Lemma test is one-sided)";
      break;
    }
  }
  return out;
}

R2Result check_R2(const IntervalFamily& fam) {
  R2Result out;
  const QPoly& a0 = fam.coeffs().front().lo;
  const QPoly& b0 = fam.coeffs().front().hi;
  JointNonpositive jn = joint_nonpositive(a0, -b0, fam.alpha_range());
  switch (jn.verdict) {
    case JointNonpositive::Verdict::empty:
      out.verdict = CertVerdict::certified;
      break;
    case JointNonpositive::Verdict::witness:
      out.verdict = CertVerdict::refuted;
      out.witness_alpha = jn.witness_point;
      break;
    case JointNonpositive::Verdict::touching:
      out.verdict = CertVerdict::inconclusive;
      out.touch_bracket = jn.touch_bracket;
      break;
  }
  return out;
}

R3R4Result check_R3_R4(const IntervalFamily& fam, const QPoly& rep_minus,
                       const QPoly& rep_plus) {
  R3R4Result out;
  out.minus = q_unstable_certify(fam.instantiate(fam.alpha_range().lo), rep_minus);
  out.plus = q_unstable_certify(fam.instantiate(fam.alpha_range().hi), rep_plus);
  out.certified = out.minus.verdict == CertVerdict::certified &&
                  out.plus.verdict == CertVerdict::certified &&
                  out.minus.q != out.plus.q;
  return out;
}

}  // namespace hopfcert
