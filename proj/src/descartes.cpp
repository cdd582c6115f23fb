#include "hopfcert/descartes.hpp"

namespace hopfcert {

namespace {

CoeffInterval scale_sym(const CoeffInterval& ci, const Rational& c) {
  if (sign(c) >= 0) return {c * ci.lo, c * ci.hi};
  return {c * ci.hi, c * ci.lo};
}

CoeffInterval add_sym(const CoeffInterval& a, const CoeffInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

}  // namespace

std::pair<IntervalPoly, IntervalPoly> re_im_parts(const FixedFamily& fam) {
  int n = fam.degree();
  IntervalPoly re, im;
  re.coeffs.assign(static_cast<size_t>(n) + 1, RationalInterval::point(Rational(0)));
  im.coeffs = re.coeffs;
  for (int k = 0; k <= n; ++k) {
    RationalInterval iv = k == n ? RationalInterval::point(Rational(1))
                                 : fam.coeffs[static_cast<size_t>(k)];
    if (k % 2 == 0) {
      Rational s((k / 2) % 2 == 0 ? 1 : -1);
      re.coeffs[static_cast<size_t>(k)] = scale(iv, s);
    } else {
      Rational s(((k - 1) / 2) % 2 == 0 ? 1 : -1);
      im.coeffs[static_cast<size_t>(k)] = scale(iv, s);
    }
  }
  return {re, im};
}

std::pair<SymIntervalPoly, SymIntervalPoly> re_im_parts(const IntervalFamily& fam) {
  int n = fam.degree();
  const QPoly zero;
  const QPoly one = QPoly::constant(Rational(1));
  SymIntervalPoly re, im;
  re.coeffs.assign(static_cast<size_t>(n) + 1, CoeffInterval{zero, zero});
  im.coeffs = re.coeffs;
  for (int k = 0; k <= n; ++k) {
    CoeffInterval ci =
        k == n ? CoeffInterval{one, one} : fam.coeffs()[static_cast<size_t>(k)];
    if (k % 2 == 0) {
      Rational s((k / 2) % 2 == 0 ? 1 : -1);
      re.coeffs[static_cast<size_t>(k)] = scale_sym(ci, s);
    } else {
      Rational s(((k - 1) / 2) % 2 == 0 ? 1 : -1);
      im.coeffs[static_cast<size_t>(k)] = scale_sym(ci, s);
    }
  }
  return {re, im};
}

IntervalPoly combine_T(const FixedFamily& fam, const QPoly& q, const QPoly& r) {
  auto [re, im] = re_im_parts(fam);
  int n = fam.degree();
  int deg = std::max(q.degree(), r.degree()) + n;
  IntervalPoly out;
  out.coeffs.assign(static_cast<size_t>(std::max(deg, 0)) + 1,
                    RationalInterval::point(Rational(0)));
  for (int j = 0; j <= q.degree(); ++j)
    if (q.coeff(j) != 0)
      for (int k = 0; k <= n; ++k)
        out.coeffs[static_cast<size_t>(j + k)] =
            out.coeffs[static_cast<size_t>(j + k)] + scale(re.coeff(k), q.coeff(j));
  for (int j = 0; j <= r.degree(); ++j)
    if (r.coeff(j) != 0)
      for (int k = 0; k <= n; ++k)
        out.coeffs[static_cast<size_t>(j + k)] =
            out.coeffs[static_cast<size_t>(j + k)] + scale(im.coeff(k), r.coeff(j));
  while (!out.coeffs.empty() && out.coeffs.back().lo == 0 && out.coeffs.back().hi == 0)
    out.coeffs.pop_back();
  return out;
}

SymIntervalPoly combine_T(const IntervalFamily& fam, const QPoly& q, const QPoly& r) {
  auto [re, im] = re_im_parts(fam);
  int n = fam.degree();
  int deg = std::max(q.degree(), r.degree()) + n;
  const QPoly zero;
  SymIntervalPoly out;
  out.coeffs.assign(static_cast<size_t>(std::max(deg, 0)) + 1,
                    CoeffInterval{zero, zero});
  auto acc = [&](int at, const CoeffInterval& v) {
    out.coeffs[static_cast<size_t>(at)] =
        add_sym(out.coeffs[static_cast<size_t>(at)], v);
  };
  for (int j = 0; j <= q.degree(); ++j)
    if (q.coeff(j) != 0)
      for (int k = 0; k <= n; ++k)
        acc(j + k, scale_sym(re.coeffs[static_cast<size_t>(k)], q.coeff(j)));
  for (int j = 0; j <= r.degree(); ++j)
    if (r.coeff(j) != 0)
      for (int k = 0; k <= n; ++k)
        acc(j + k, scale_sym(im.coeffs[static_cast<size_t>(k)], r.coeff(j)));
  while (!out.coeffs.empty() && out.coeffs.back().lo.is_zero() &&
         out.coeffs.back().hi.is_zero())
    out.coeffs.pop_back();
  return out;
}

namespace {

enum class CoefClass { zero, neg, pos, mixed };

// one-pivot pattern check: everything below the pivot lies in (-inf, 0],
// everything above in [0, inf), or the mirror image
SignChangeVerdict pattern_verdict(const std::vector<CoefClass>& cls) {
  std::vector<int> idx;
  for (size_t k = 0; k < cls.size(); ++k)
    if (cls[k] != CoefClass::zero) idx.push_back(static_cast<int>(k));

  SignChangeVerdict out;
  if (idx.empty()) {
    out.at_most_one = true;
    out.pivot = 0;
    return out;
  }
  const int inf = static_cast<int>(cls.size());
  int a1 = inf, b1 = -1;  // first non-neg, last non-pos
  int a2 = inf, b2 = -1;  // first non-pos, last non-neg
  for (int k : idx) {
    if (a1 == inf && cls[static_cast<size_t>(k)] != CoefClass::neg) a1 = k;
    if (a2 == inf && cls[static_cast<size_t>(k)] != CoefClass::pos) a2 = k;
    if (cls[static_cast<size_t>(k)] != CoefClass::pos) b1 = k;
    if (cls[static_cast<size_t>(k)] != CoefClass::neg) b2 = k;
  }
  if (b1 <= a1) {
    out.at_most_one = true;
    out.pivot = b1 >= 0 ? b1 : idx.front();
  } else if (b2 <= a2) {
    out.at_most_one = true;
    out.pivot = b2 >= 0 ? b2 : idx.front();
  } else {
    out.at_most_one = false;
    out.violating = {std::min(a1, a2), std::max(b1, b2)};
  }
  return out;
}

}  // namespace

SignChangeVerdict count_sign_changes(const IntervalPoly& p) {
  std::vector<CoefClass> cls;
  cls.reserve(p.coeffs.size());
  for (const auto& iv : p.coeffs) {
    if (iv.lo == 0 && iv.hi == 0)
      cls.push_back(CoefClass::zero);
    else if (iv.nonpositive())
      cls.push_back(CoefClass::neg);
    else if (iv.nonnegative())
      cls.push_back(CoefClass::pos);
    else
      cls.push_back(CoefClass::mixed);
  }
  return pattern_verdict(cls);
}

R5DescartesResult check_R5ppp(const IntervalFamily& fam, const QPoly& q,
                              const QPoly& r) {
  R5DescartesResult out;
  out.T = combine_T(fam, q, r);
  const RationalInterval& range = fam.alpha_range();

  // uniform-in-alpha classification; a coefficient without one can still sit
  // at the pivot, where the pattern leaves it unconstrained
  std::vector<CoefClass> cls;
  int first_unstable = -1;
  for (int k = 0; k <= out.T.degree(); ++k) {
    const CoeffInterval& ci = out.T.coeffs[static_cast<size_t>(k)];
    RangeSign slo = classify_range_sign(ci.lo, range);
    RangeSign shi = classify_range_sign(ci.hi, range);
    if (slo == RangeSign::zero && shi == RangeSign::zero) {
      cls.push_back(CoefClass::zero);
      continue;
    }
    if (range_nonpositive(shi)) {
      cls.push_back(CoefClass::neg);
      continue;
    }
    if (range_nonnegative(slo)) {
      cls.push_back(CoefClass::pos);
      continue;
    }
    cls.push_back(CoefClass::mixed);
    bool endpoint_varies = !(slo == RangeSign::negative && shi == RangeSign::positive);
    if (endpoint_varies && first_unstable < 0) {
      first_unstable = k;
      const QPoly& bad = (slo == RangeSign::mixed) ? ci.lo : ci.hi;
      RootIsolation iso = isolate_real_roots(bad, range);
      if (!iso.exact.empty())
        out.offending_alpha = RationalInterval::point(iso.exact.front());
      else if (!iso.brackets.empty())
        out.offending_alpha = iso.brackets.front();
    }
  }
  out.pattern = pattern_verdict(cls);
  if (out.pattern.at_most_one) {
    out.verdict = CertVerdict::certified;
    return out;
  }
  out.verdict = CertVerdict::inconclusive;
  if (first_unstable >= 0) {
    out.offending_degree = first_unstable;
    out.note = "coefficient " + std::to_string(first_unstable) +
               " has an alpha-dependent sign; subdividing the alpha range may help";
  } else {
    out.note = "interval sign pattern admits more than one sign change";
  }
  return out;
}

FixedDescartesResult check_fixed_descartes(const QPoly& p, const QPoly& q,
                                           const QPoly& r) {
  FixedDescartesResult out;
  out.combined = q * re_of_i_omega(p) + r * im_of_i_omega(p);
  int prev = 0, changes = 0;
  for (int k = 0; k <= out.combined.degree(); ++k) {
    int s = sign(out.combined.coeff(k));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  out.sign_changes = changes;
  out.at_most_one_pair = changes <= 1;
  return out;
}

}  // namespace hopfcert
