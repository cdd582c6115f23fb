#include "hopfcert/roots.hpp"

#include <algorithm>
#include <cassert>

namespace hopfcert {

Rational cauchy_bound(const QPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("cauchy bound of zero polynomial");
  Rational lead = rational_abs(p.lead());
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) {
    Rational a = rational_abs(p.coeff(k)) / lead;
    if (a > m) m = a;
  }
  return m + 1;
}

namespace {

// positive-content normalization keeps every sign intact
QPoly normalize_positive(const QPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Integer num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    Integer scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) return p;
  return make_rational(den_lcm, num_gcd) * p;
}

int variations(const std::vector<int>& signs) {
  int v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

std::vector<QPoly> signed_remainder_sequence(const QPoly& a0, const QPoly& a1) {
  std::vector<QPoly> seq;
  seq.push_back(normalize_positive(a0));
  if (a1.is_zero()) return seq;
  seq.push_back(normalize_positive(a1));
  while (true) {
    const QPoly& a = seq[seq.size() - 2];
    const QPoly& b = seq.back();
    QPoly r = divmod(a, b).second;
    if (r.is_zero()) break;
    seq.push_back(normalize_positive(-r));
  }
  return seq;
}

}  // namespace

SturmChain sturm_chain(const QPoly& p) {
  SturmChain chain;
  if (p.is_zero()) return chain;
  chain.seq = signed_remainder_sequence(p, derivative(p));
  return chain;
}

int variations_at(const SturmChain& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.seq.size());
  for (const auto& q : chain.seq) signs.push_back(sign(q.eval(x)));
  return variations(signs);
}

int variations_at_infinity(const SturmChain& chain, bool positive) {
  std::vector<int> signs;
  signs.reserve(chain.seq.size());
  for (const auto& q : chain.seq) {
    int s = sign(q.lead());
    if (!positive && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

int count_real_roots(const QPoly& squarefree) {
  if (squarefree.degree() <= 0) return 0;
  SturmChain chain = sturm_chain(squarefree);
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

int count_real_roots(const QPoly& squarefree, const Rational& a, const Rational& b) {
  if (squarefree.degree() <= 0) return 0;
  if (a >= b) return 0;
  SturmChain chain = sturm_chain(squarefree);
  return variations_at(chain, a) - variations_at(chain, b);
}

namespace {

std::vector<Integer> bounded_divisors(Integer n, bool& complete) {
  complete = true;
  n = abs(n);
  std::vector<std::pair<Integer, int>> factors;
  Integer d = 2;
  const Integer limit = 100000;
  while (n > 1 && d * d <= n) {
    if (d > limit) {
      complete = false;
      break;
    }
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      factors.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (complete)
      factors.emplace_back(n, 1);
  }
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [prime, exp] : factors) {
    size_t base = divs.size();
    Integer pk = 1;
    for (int e = 1; e <= exp; ++e) {
      pk *= prime;
      for (size_t i = 0; i < base; ++i) {
        divs.push_back(divs[i] * pk);
        if (divs.size() > 2048) {
          complete = false;
          return divs;
        }
      }
    }
  }
  return divs;
}

// Rational roots of a squarefree polynomial through the rational-root theorem
// with bounded factoring. Misses are harmless: such a root simply stays
// bracketed (or is picked up by the bisection fallback below).
std::vector<Rational> rational_roots_of_squarefree(const QPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  QPoly q = normalize_positive(p);
  int low = 0;
  while (q.coeff(low) == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  Integer lead = q.lead().get_num();
  Integer trail = q.coeff(low).get_num();
  // divisor enumeration only pays off for small integers
  if (mpz_sizeinbase(lead.get_mpz_t(), 2) > 48 ||
      mpz_sizeinbase(trail.get_mpz_t(), 2) > 48) {
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  bool c1 = false, c2 = false;
  std::vector<Integer> nums = bounded_divisors(trail, c1);
  std::vector<Integer> dens = bounded_divisors(lead, c2);
  for (const Integer& n : nums) {
    for (const Integer& d : dens) {
      Rational cand = make_rational(n, d);
      if (q.eval(cand) == 0) roots.push_back(cand);
      Rational neg = -cand;
      if (q.eval(neg) == 0) roots.push_back(neg);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

QPoly deflate_root(const QPoly& p, const Rational& r) {
  QPoly lin(std::vector<Rational>{-r, Rational(1)});
  return divexact(p, lin);
}

}  // namespace

RootIsolation isolate_real_roots(const QPoly& p, const RationalInterval& domain) {
  if (p.is_zero())
    throw std::invalid_argument("zero polynomial has no isolated roots");
  RootIsolation out;
  if (p.degree() == 0) return out;

  if (domain.is_point()) {
    if (p.eval(domain.lo) == 0) out.exact.push_back(domain.lo);
    return out;
  }

  QPoly f = squarefree_part(p);
  for (const Rational& r : rational_roots_of_squarefree(f)) {
    if (domain.contains(r)) out.exact.push_back(r);
    f = deflate_root(f, r);
  }
  for (const Rational& e : {domain.lo, domain.hi}) {
    if (f.degree() > 0 && f.eval(e) == 0) {
      out.exact.push_back(e);
      f = deflate_root(f, e);
    }
  }

  // bisection on the Sturm counts; a midpoint landing on a missed rational
  // root deflates it and restarts
  bool restart = true;
  while (restart && f.degree() > 0) {
    restart = false;
    out.brackets.clear();
    SturmChain chain = sturm_chain(f);
    std::vector<std::pair<Rational, Rational>> work{{domain.lo, domain.hi}};
    while (!work.empty()) {
      auto [a, b] = work.back();
      work.pop_back();
      int n = variations_at(chain, a) - variations_at(chain, b);
      if (n == 0) continue;
      if (n == 1) {
        out.brackets.emplace_back(a, b);
        continue;
      }
      Rational mid = (a + b) / 2;
      if (f.eval(mid) == 0) {
        out.exact.push_back(mid);
        f = deflate_root(f, mid);
        restart = true;
        break;
      }
      work.emplace_back(a, mid);
      work.emplace_back(mid, b);
    }
  }

  std::sort(out.exact.begin(), out.exact.end());
  out.exact.erase(std::unique(out.exact.begin(), out.exact.end()), out.exact.end());

  // shrink brackets until no exact root sits inside one or on its boundary
  for (auto& br : out.brackets) {
    bool again = true;
    while (again) {
      again = false;
      for (const Rational& r : out.exact) {
        if (br.lo <= r && r <= br.hi) {
          br = refine_bracket(f, br, br.width() / 4);
          again = true;
          break;
        }
      }
    }
  }
  std::sort(out.brackets.begin(), out.brackets.end(),
            [](const RationalInterval& a, const RationalInterval& b) {
              return a.lo < b.lo;
            });
  return out;
}

RationalInterval refine_bracket(const QPoly& squarefree, RationalInterval bracket,
                                const Rational& max_width) {
  int slo = sign(squarefree.eval(bracket.lo));
  int shi = sign(squarefree.eval(bracket.hi));
  if (slo == 0 || shi == 0 || slo == shi)
    throw std::invalid_argument("refine_bracket needs a sign-change bracket");
  while (bracket.width() > max_width) {
    Rational mid = bracket.mid();
    int sm = sign(squarefree.eval(mid));
    if (sm == 0) {
      // the root is the rational midpoint; pin a thin bracket around it
      Rational w = bracket.width() / 4;
      bracket = RationalInterval(mid - w, mid + w);
      continue;
    }
    if (sm == slo)
      bracket = RationalInterval(mid, bracket.hi);
    else
      bracket = RationalInterval(bracket.lo, mid);
  }
  return bracket;
}

RangeSign classify_range_sign(const QPoly& p, const RationalInterval& domain) {
  if (p.is_zero()) return RangeSign::zero;
  if (p.degree() == 0)
    return sign(p.coeff(0)) > 0 ? RangeSign::positive : RangeSign::negative;
  if (domain.is_point()) {
    int s = sign(p.eval(domain.lo));
    if (s > 0) return RangeSign::positive;
    if (s < 0) return RangeSign::negative;
    return RangeSign::zero;
  }

  RootIsolation roots = isolate_real_roots(p, domain);
  bool saw_pos = false, saw_neg = false, saw_zero = false;
  auto probe = [&](const Rational& x) {
    int s = sign(p.eval(x));
    if (s > 0)
      saw_pos = true;
    else if (s < 0)
      saw_neg = true;
    else
      saw_zero = true;
  };
  probe(domain.lo);
  probe(domain.hi);
  if (!roots.exact.empty()) saw_zero = true;
  for (const auto& br : roots.brackets) {
    saw_zero = true;
    probe(br.lo);
    probe(br.hi);
  }
  if (roots.count() == 0) probe(domain.mid());
  if (saw_pos && saw_neg) return RangeSign::mixed;
  if (saw_zero && saw_pos) return RangeSign::nonneg_with_zero;
  if (saw_zero && saw_neg) return RangeSign::nonpos_with_zero;
  if (saw_zero) return RangeSign::zero;
  return saw_pos ? RangeSign::positive : RangeSign::negative;
}

SignVerdict sign_on_interval(const QPoly& p, const RationalInterval& domain) {
  switch (classify_range_sign(p, domain)) {
    case RangeSign::positive:
      return SignVerdict::strictly_positive;
    case RangeSign::negative:
      return SignVerdict::strictly_negative;
    case RangeSign::mixed:
      return SignVerdict::mixed;
    default:
      return SignVerdict::has_zero;
  }
}

namespace {

// nonemptiness of {x in domain : g(x) <= 0} for a single polynomial
JointNonpositive nonpositive_somewhere(const QPoly& g, const RationalInterval& domain) {
  JointNonpositive res;
  if (g.is_zero()) {
    res.verdict = JointNonpositive::Verdict::witness;
    res.witness_point = domain.mid();
    return res;
  }
  for (const Rational& x : {domain.lo, domain.hi, domain.mid()}) {
    if (sign(g.eval(x)) <= 0) {
      res.verdict = JointNonpositive::Verdict::witness;
      res.witness_point = x;
      return res;
    }
  }
  RootIsolation roots = isolate_real_roots(g, domain);
  if (!roots.exact.empty()) {
    res.verdict = JointNonpositive::Verdict::witness;
    res.witness_point = roots.exact.front();
    return res;
  }
  for (const auto& br : roots.brackets) {
    for (const Rational& x : {br.lo, br.hi, br.mid()}) {
      if (sign(g.eval(x)) <= 0) {
        res.verdict = JointNonpositive::Verdict::witness;
        res.witness_point = x;
        return res;
      }
    }
  }
  if (!roots.brackets.empty()) {
    // every probe was positive: the roots are even-order touch points
    res.verdict = JointNonpositive::Verdict::touching;
    res.touch_bracket = roots.brackets.front();
    return res;
  }
  res.verdict = JointNonpositive::Verdict::empty;
  return res;
}

struct Marker {
  RationalInterval span;  // degenerate for exact roots
  bool exact;
  int which;  // 0: common root of f and g, 1: f only, 2: g only
};

}  // namespace

JointNonpositive joint_nonpositive(const QPoly& f, const QPoly& g,
                                   const RationalInterval& domain) {
  JointNonpositive res;
  if (domain.is_point()) {
    if (sign(f.eval(domain.lo)) <= 0 && sign(g.eval(domain.lo)) <= 0) {
      res.verdict = JointNonpositive::Verdict::witness;
      res.witness_point = domain.lo;
    }
    return res;
  }
  if (f.is_zero() || f.degree() == 0) {
    if (!f.is_zero() && sign(f.coeff(0)) > 0) return res;
    return nonpositive_somewhere(g, domain);
  }
  if (g.is_zero() || g.degree() == 0) {
    if (!g.is_zero() && sign(g.coeff(0)) > 0) return res;
    return nonpositive_somewhere(f, domain);
  }

  QPoly sf = squarefree_part(f);
  QPoly sg = squarefree_part(g);
  QPoly h = poly_gcd(sf, sg);
  QPoly f1 = h.degree() > 0 ? divexact(sf, h) : sf;
  QPoly g1 = h.degree() > 0 ? divexact(sg, h) : sg;

  std::vector<Marker> markers;
  auto add_roots = [&](const QPoly& q, int which) {
    if (q.degree() <= 0) return;
    RootIsolation iso = isolate_real_roots(q, domain);
    for (const Rational& r : iso.exact)
      markers.push_back({RationalInterval::point(r), true, which});
    for (const auto& br : iso.brackets) markers.push_back({br, false, which});
  };
  add_roots(h, 0);
  add_roots(f1, 1);
  add_roots(g1, 2);

  // shrink brackets until pairwise disjoint, clear of exact markers, and with
  // endpoints that are roots of neither f nor g
  auto owner_poly = [&](int which) -> const QPoly& {
    return which == 0 ? h : (which == 1 ? f1 : g1);
  };
  bool again = true;
  int guard = 0;
  while (again && ++guard < 400) {
    again = false;
    for (auto& m : markers) {
      if (m.exact) continue;
      bool bad = false;
      for (const auto& o : markers) {
        if (&o == &m) continue;
        if (o.exact) {
          if (m.span.lo < o.span.lo && o.span.lo < m.span.hi) bad = true;
        } else if (m.span.intersects(o.span)) {
          bad = true;
        }
      }
      if (sign(f.eval(m.span.lo)) == 0 || sign(f.eval(m.span.hi)) == 0 ||
          sign(g.eval(m.span.lo)) == 0 || sign(g.eval(m.span.hi)) == 0)
        bad = true;
      if (bad) {
        m.span = refine_bracket(owner_poly(m.which), m.span, m.span.width() / 4);
        again = true;
      }
    }
  }
  if (guard >= 400)
    throw std::logic_error("joint_nonpositive failed to separate root brackets");

  std::sort(markers.begin(), markers.end(),
            [](const Marker& a, const Marker& b) { return a.span.lo < b.span.lo; });

  std::vector<Rational> samples{domain.lo, domain.hi};
  for (size_t i = 0; i + 1 < markers.size(); ++i) {
    Rational a = markers[i].span.hi, b = markers[i + 1].span.lo;
    if (a < b) samples.push_back((a + b) / 2);
  }
  for (const auto& m : markers) {
    samples.push_back(m.span.lo);
    samples.push_back(m.span.hi);
    if (m.exact) samples.push_back(m.span.lo);
  }
  for (const Rational& x : samples) {
    if (!domain.contains(x)) continue;
    if (sign(f.eval(x)) <= 0 && sign(g.eval(x)) <= 0) {
      res.verdict = JointNonpositive::Verdict::witness;
      res.witness_point = x;
      return res;
    }
  }

  // no full-dimensional overlap; isolated points remain possible
  for (const auto& m : markers) {
    if (m.which == 0) {
      if (m.exact) {
        res.verdict = JointNonpositive::Verdict::witness;
        res.witness_point = m.span.lo;
      } else {
        res.verdict = JointNonpositive::Verdict::touching;
        res.touch_bracket = m.span;
      }
      return res;
    }
    if (!m.exact) {
      // the other factor keeps a constant sign across this bracket
      const QPoly& other = m.which == 1 ? g : f;
      if (sign(other.eval(m.span.mid())) < 0) {
        res.verdict = JointNonpositive::Verdict::touching;
        res.touch_bracket = m.span;
        return res;
      }
    }
  }
  res.verdict = JointNonpositive::Verdict::empty;
  return res;
}

int cauchy_index(const QPoly& f, const QPoly& g) {
  if (f.is_zero()) throw std::invalid_argument("cauchy index with zero denominator");
  if (g.is_zero()) return 0;
  SturmChain chain{signed_remainder_sequence(f, g)};
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

QPoly re_of_i_omega(const QPoly& p) {
  std::vector<Rational> c(p.coeffs().size(), Rational(0));
  for (int k = 0; k <= p.degree(); k += 2) {
    Rational v = p.coeff(k);
    if ((k / 2) % 2 == 1) v = -v;
    c[static_cast<size_t>(k)] = v;
  }
  return QPoly(std::move(c));
}

QPoly im_of_i_omega(const QPoly& p) {
  std::vector<Rational> c(p.coeffs().size(), Rational(0));
  for (int k = 1; k <= p.degree(); k += 2) {
    Rational v = p.coeff(k);
    if (((k - 1) / 2) % 2 == 1) v = -v;
    c[static_cast<size_t>(k)] = v;
  }
  return QPoly(std::move(c));
}

}  // namespace hopfcert
