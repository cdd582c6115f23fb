#include "hopfcert/regions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hopfcert {

std::string to_string(BnbReport::Verdict v) {
  switch (v) {
    case BnbReport::Verdict::certified_empty:
      return "certified_empty";
    case BnbReport::Verdict::nonempty_with_witness:
      return "nonempty_with_witness";
    default:
      return "inconclusive";
  }
}

namespace {

constexpr size_t kMaxUnresolvedKept = 32;
constexpr long kDefaultBoxBudget = 400000;

// Generic exhaustive subdivision. discard() certifies a box holds no point of
// the target set; witness() exactly tests one rational point. Deterministic
// DFS order, depth-first so witnesses surface quickly.
BnbReport bnb_search(const Box2& start, int depth_limit,
                     const std::function<bool(const Box2&)>& discard,
                     const std::function<bool(const Point2&)>& witness,
                     long box_budget = kDefaultBoxBudget) {
  BnbReport rep;
  rep.verdict = BnbReport::Verdict::certified_empty;
  if (start.alpha.lo > start.alpha.hi || start.beta.lo > start.beta.hi) return rep;
  std::vector<std::pair<Box2, int>> stack{{start, 0}};
  while (!stack.empty()) {
    auto [box, depth] = stack.back();
    stack.pop_back();
    if (rep.boxes_processed >= box_budget) {
      rep.verdict = BnbReport::Verdict::inconclusive;
      if (rep.unresolved.size() < kMaxUnresolvedKept) rep.unresolved.push_back(box);
      continue;
    }
    ++rep.boxes_processed;
    rep.max_depth_reached = std::max(rep.max_depth_reached, depth);
    if (discard(box)) continue;
    Point2 center{box.alpha.mid(), box.beta.mid()};
    if (witness(center)) {
      rep.verdict = BnbReport::Verdict::nonempty_with_witness;
      rep.witness = center;
      return rep;
    }
    if (depth >= depth_limit) {
      rep.verdict = BnbReport::Verdict::inconclusive;
      if (rep.unresolved.size() < kMaxUnresolvedKept) rep.unresolved.push_back(box);
      continue;
    }
    Rational am = box.alpha.mid(), bm = box.beta.mid();
    bool split_alpha = box.alpha.width() > 0;
    bool split_beta = box.beta.width() > 0;
    if (!split_alpha && !split_beta) {
      // a point box that neither discards nor witnesses: the constraints
      // vanish there without all being <= 0; nothing below to explore
      rep.verdict = BnbReport::Verdict::inconclusive;
      if (rep.unresolved.size() < kMaxUnresolvedKept) rep.unresolved.push_back(box);
      continue;
    }
    std::vector<RationalInterval> alpha_parts, beta_parts;
    if (split_alpha)
      alpha_parts = {{box.alpha.lo, am}, {am, box.alpha.hi}};
    else
      alpha_parts = {box.alpha};
    if (split_beta)
      beta_parts = {{box.beta.lo, bm}, {bm, box.beta.hi}};
    else
      beta_parts = {box.beta};
    for (const auto& ap : alpha_parts)
      for (const auto& bp : beta_parts) stack.push_back({Box2{ap, bp}, depth + 1});
  }
  return rep;
}

bool strip_empty(const SignPair& sp, const RationalInterval& alpha,
                 const RationalInterval& beta, int depth_limit) {
  auto discard = [&](const Box2& b) {
    return sp.w1.box_range(b).strictly_positive() ||
           sp.w2.box_range(b).strictly_positive();
  };
  // an fR point inside the strip sinks the candidate immediately
  auto witness = [&](const Point2& p) {
    return sign(sp.w1.eval(p.x, p.y)) <= 0 && sign(sp.w2.eval(p.x, p.y)) <= 0;
  };
  BnbReport rep = bnb_search(Box2{alpha, beta}, depth_limit, discard, witness, 40000);
  return rep.verdict == BnbReport::Verdict::certified_empty;
}

void require_R2(const IntervalFamily& fam) {
  if (check_R2(fam).verdict != CertVerdict::certified)
    throw std::runtime_error("R2 must hold before region analysis");
}

}  // namespace

RegionContext make_region_context(const IntervalFamily& fam, int depth_limit) {
  RegionContext ctx;
  ctx.sp = sign_pair(fam);
  ctx.beta_bound = fam.beta_bound();
  const RationalInterval& ar = fam.alpha_range();
  int strip_depth = std::min(depth_limit, 14);

  ctx.beta_min = 0;
  Rational delta = ctx.beta_bound / 2;
  for (int k = 0; k < 28; ++k) {
    if (strip_empty(ctx.sp, ar, {Rational(0), delta}, strip_depth)) {
      ctx.beta_min = delta;
      break;
    }
    delta /= 2;
  }

  ctx.beta_max = ctx.beta_bound;
  Rational cut = ctx.beta_bound / 2;
  while (cut > ctx.beta_min &&
         strip_empty(ctx.sp, ar, {cut, ctx.beta_max}, strip_depth)) {
    ctx.beta_max = cut;
    cut /= 2;
  }

  if (ctx.beta_min > 0) {
    Rational ratio = ctx.beta_bound / ctx.beta_min;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), ratio.get_num().get_mpz_t(), ratio.get_den().get_mpz_t());
    ctx.jmax_default = static_cast<int>(fl.get_si());
  }
  return ctx;
}

R5ppResult certify_R5pp(const IntervalFamily& fam, int j_max, int depth_limit) {
  require_R2(fam);
  R5ppResult out;
  out.context = make_region_context(fam, depth_limit);
  const RegionContext& ctx = out.context;
  if (j_max <= 0) j_max = std::max(2, ctx.jmax_default);
  out.jmax_used = j_max;

  if (ctx.beta_min == 0) {
    out.report.verdict = BnbReport::Verdict::inconclusive;
    out.failed_j = -1;
    return out;
  }

  BnbReport merged;
  merged.verdict = BnbReport::Verdict::certified_empty;
  for (int j = 2; j <= j_max; ++j) {
    // a point of fR and fS_j needs beta in [beta_min, beta_max / j]
    Rational hi = ctx.beta_max / j;
    if (hi < ctx.beta_min) continue;  // trivially empty
    BiPoly w1j = ctx.sp.w1.scale_beta(Rational(j));
    BiPoly w2j = ctx.sp.w2.scale_beta(Rational(j));
    auto discard = [&](const Box2& b) {
      return ctx.sp.w1.box_range(b).strictly_positive() ||
             ctx.sp.w2.box_range(b).strictly_positive() ||
             w1j.box_range(b).strictly_positive() ||
             w2j.box_range(b).strictly_positive();
    };
    auto witness = [&](const Point2& p) {
      Rational jb = Rational(j) * p.y;
      return sign(ctx.sp.w1.eval(p.x, p.y)) <= 0 &&
             sign(ctx.sp.w2.eval(p.x, p.y)) <= 0 &&
             sign(ctx.sp.w1.eval(p.x, jb)) <= 0 && sign(ctx.sp.w2.eval(p.x, jb)) <= 0;
    };
    BnbReport rep = bnb_search(Box2{fam.alpha_range(), {ctx.beta_min, hi}},
                               depth_limit, discard, witness);
    merged.boxes_processed += rep.boxes_processed;
    merged.max_depth_reached = std::max(merged.max_depth_reached, rep.max_depth_reached);
    out.per_j.emplace_back(j, rep);
    if (rep.verdict == BnbReport::Verdict::nonempty_with_witness) {
      merged.verdict = rep.verdict;
      merged.witness = rep.witness;
      out.failed_j = j;
      break;
    }
    if (rep.verdict == BnbReport::Verdict::inconclusive) {
      if (merged.verdict == BnbReport::Verdict::certified_empty)
        merged.verdict = BnbReport::Verdict::inconclusive;
      if (out.failed_j < 0) out.failed_j = j;
      for (const auto& b : rep.unresolved)
        if (merged.unresolved.size() < kMaxUnresolvedKept) merged.unresolved.push_back(b);
    }
  }
  out.report = merged;
  return out;
}

namespace {

// The frequencies whose shadow can reach an edge are pinned by the certified
// band [beta_min, beta_max] around fR, independent of the user j cap: only
// j with j * beta_edge meeting the band matter, and all of them must pass.
constexpr int kEdgeFrequencyCap = 4096;

std::pair<int, int> edge_j_range(const RationalInterval& edge_beta,
                                 const RegionContext& ctx) {
  int lo = 1, hi = kEdgeFrequencyCap;
  if (edge_beta.hi > 0) {
    Rational l = ctx.beta_min / edge_beta.hi;
    Integer fl;
    mpz_cdiv_q(fl.get_mpz_t(), l.get_num().get_mpz_t(), l.get_den().get_mpz_t());
    lo = std::max(1, static_cast<int>(fl.get_si()));
  }
  if (edge_beta.lo > 0) {
    Rational h = ctx.beta_max / edge_beta.lo;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), h.get_num().get_mpz_t(), h.get_den().get_mpz_t());
    Integer capped = fl > kEdgeFrequencyCap ? Integer(kEdgeFrequencyCap + 1)
                                            : (fl < 0 ? Integer(0) : fl);
    hi = static_cast<int>(capped.get_si());
  }
  return {lo, hi};
}

}  // namespace

namespace {

R5pResult certify_R5p_with_context(const IntervalFamily& fam,
                                   const std::vector<PolygonDisk>& disks,
                                   int j_max, int depth_limit, RegionContext ctx,
                                   bool boundary_first) {
  if (disks.empty()) throw std::invalid_argument("R5' needs at least one disk");
  for (size_t i = 0; i < disks.size(); ++i) {
    for (size_t j = i + 1; j < disks.size(); ++j)
      if (!polygons_disjoint(disks[i], disks[j]))
        throw std::invalid_argument("overlapping disks");
  }
  R5pResult out;
  out.context = std::move(ctx);
  {
  const RegionContext& ctx = out.context;
  for (const auto& d : disks) {
    if (!fam.alpha_range().contains_interval(d.alpha_hull()) || d.beta_hull().lo < 0)
      throw std::invalid_argument("disk escapes the alpha/beta strip");
  }
  if (j_max <= 0) j_max = std::max(2, ctx.jmax_default);
  out.jmax_used = j_max;

  // clause (ii): every box is either free of fR or inside one disk
  auto discard = [&](const Box2& b) {
    if (ctx.sp.w1.box_range(b).strictly_positive()) return true;
    if (ctx.sp.w2.box_range(b).strictly_positive()) return true;
    for (const auto& d : disks)
      if (d.contains_box(b)) return true;
    return false;
  };
  auto witness = [&](const Point2& p) {
    if (sign(ctx.sp.w1.eval(p.x, p.y)) > 0 || sign(ctx.sp.w2.eval(p.x, p.y)) > 0)
      return false;
    for (const auto& d : disks)
      if (d.locate(p) != PointLocation::outside) return false;
    return true;  // a point of fR not covered by any disk
  };
  if (!boundary_first)
    out.coverage = bnb_search(Box2{fam.alpha_range(), {Rational(0), ctx.beta_bound}},
                              depth_limit, discard, witness);

  // clause (iii): no fS_j (and no fR, j = 1) point on any disk boundary
  out.boundary = CertVerdict::certified;
  for (size_t di = 0; di < disks.size() && out.boundary != CertVerdict::refuted; ++di) {
    auto edges = disks[di].edges();
    for (size_t ei = 0; ei < edges.size(); ++ei) {
      const auto& e = edges[ei];
      RationalInterval ebeta{std::min(e.a.y, e.b.y), std::max(e.a.y, e.b.y)};
      if (ebeta.lo == 0 && ctx.beta_min > 0 && ebeta.hi > 0) {
        EdgeIssue issue;
        issue.disk = static_cast<int>(di);
        issue.edge = static_cast<int>(ei);
        issue.note =
            "edge touches beta = 0: the full shadow union cannot be checked "
            "with finitely many j; lift the disk above beta = 0";
        out.boundary_issues.push_back(issue);
        if (out.boundary == CertVerdict::certified)
          out.boundary = CertVerdict::inconclusive;
        continue;
      }
      auto [jlo, jhi] = edge_j_range(ebeta, ctx);
      if (jhi > kEdgeFrequencyCap) {
        EdgeIssue issue;
        issue.disk = static_cast<int>(di);
        issue.edge = static_cast<int>(ei);
        issue.note = "edge sits too close to beta = 0: required frequency range "
                     "exceeds the internal cap";
        out.boundary_issues.push_back(issue);
        if (out.boundary == CertVerdict::certified)
          out.boundary = CertVerdict::inconclusive;
        continue;
      }
      QPoly at = e.alpha_of_t();
      QPoly bt = e.beta_of_t();
      for (int j = jlo; j <= jhi; ++j) {
        QPoly jbt = Rational(j) * bt;
        QPoly f = ctx.sp.w1.compose_path(at, jbt);
        QPoly g = ctx.sp.w2.compose_path(at, jbt);
        JointNonpositive jn = joint_nonpositive(f, g, {Rational(0), Rational(1)});
        if (jn.verdict == JointNonpositive::Verdict::empty) continue;
        EdgeIssue issue;
        issue.disk = static_cast<int>(di);
        issue.edge = static_cast<int>(ei);
        issue.j = j;
        if (jn.verdict == JointNonpositive::Verdict::witness) {
          issue.witness = true;
          issue.point = {at.eval(jn.witness_point), bt.eval(jn.witness_point)};
          issue.note = j == 1 ? "fR meets the disk boundary"
                              : "fS_" + std::to_string(j) + " meets the disk boundary";
          out.boundary = CertVerdict::refuted;
        } else {
          issue.note = "shadow set touches the edge; verdict undecided";
          if (out.boundary == CertVerdict::certified)
            out.boundary = CertVerdict::inconclusive;
        }
        out.boundary_issues.push_back(issue);
      }
    }
  }

  if (boundary_first) {
    // cheap edge tests ran first; only a clean boundary pays for coverage
    if (out.boundary == CertVerdict::certified)
      out.coverage = bnb_search(Box2{fam.alpha_range(), {Rational(0), ctx.beta_bound}},
                                depth_limit, discard, witness);
  }
  out.certified = out.coverage.verdict == BnbReport::Verdict::certified_empty &&
                  out.boundary == CertVerdict::certified;
  }
  return out;
}

}  // namespace

R5pResult certify_R5p(const IntervalFamily& fam, const std::vector<PolygonDisk>& disks,
                      int j_max, int depth_limit) {
  require_R2(fam);
  return certify_R5p_with_context(fam, disks, j_max, depth_limit,
                                  make_region_context(fam, depth_limit), false);
}

std::optional<PolygonDisk> search_rectangle(const IntervalFamily& fam, int j_max,
                                            int depth_limit) {
  require_R2(fam);
  RegionContext ctx = make_region_context(fam, depth_limit);
  if (ctx.beta_min == 0) return std::nullopt;
  if (j_max <= 0) j_max = std::max(2, ctx.jmax_default);
  const RationalInterval& ar = fam.alpha_range();
  Rational top = ctx.beta_bound;
  // candidate bottoms on a ladder under the certified fR strip; the boundary
  // tests run first because they are the cheap failure mode
  for (int k = 16; k >= 1; --k) {
    Rational lo = ctx.beta_min * Rational(k) / 16;
    std::vector<Point2> rect{{ar.lo, lo}, {ar.hi, lo}, {ar.hi, top}, {ar.lo, top}};
    try {
      R5pResult res = certify_R5p_with_context(fam, {PolygonDisk(rect)}, j_max,
                                               depth_limit, ctx, true);
      if (res.certified) return PolygonDisk(rect);
    } catch (const std::exception&) {
      // ill-formed candidate; keep scanning
    }
  }
  return std::nullopt;
}

RegionGrid grid_sample(const IntervalFamily& fam, int resolution, int j_max) {
  if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
  SignPair sp = sign_pair(fam);
  Rational bound = fam.beta_bound();
  if (j_max <= 0) j_max = 4;
  RegionGrid grid;
  grid.resolution_alpha = resolution;
  grid.resolution_beta = resolution;
  const RationalInterval& ar = fam.alpha_range();

  for (int i = 0; i < resolution; ++i) {
    Rational a = ar.lo + ar.width() * Rational(2 * i + 1) / (2 * resolution);
    grid.alphas.push_back(to_double(a));
  }
  for (int b = 0; b < resolution; ++b) {
    Rational bb = bound * Rational(2 * b + 1) / (2 * resolution);
    grid.betas.push_back(to_double(bb));
  }
  grid.classes.assign(static_cast<size_t>(resolution) * resolution, 0);

  for (int ib = 0; ib < resolution; ++ib) {
    Rational beta = bound * Rational(2 * ib + 1) / (2 * resolution);
    for (int ia = 0; ia < resolution; ++ia) {
      Rational alpha = ar.lo + ar.width() * Rational(2 * ia + 1) / (2 * resolution);
      double a = to_double(alpha), b = to_double(beta);
      int cls = 0;
      if (sp.w1.eval_double(a, b) <= 0 && sp.w2.eval_double(a, b) <= 0) {
        // float prefilter, then the exact check the classification relies on
        if (sign(sp.w1.eval(alpha, beta)) <= 0 && sign(sp.w2.eval(alpha, beta)) <= 0)
          cls = 1;
        else
          cls = -1;
      } else {
        for (int j = 2; j <= j_max && cls == 0; ++j) {
          double jb = static_cast<double>(j) * b;
          if (sp.w1.eval_double(a, jb) <= 0 && sp.w2.eval_double(a, jb) <= 0) {
            Rational jbr = Rational(j) * beta;
            if (sign(sp.w1.eval(alpha, jbr)) <= 0 && sign(sp.w2.eval(alpha, jbr)) <= 0)
              cls = j;
            else
              cls = -1;
          }
        }
      }
      grid.classes[static_cast<size_t>(ib) * resolution + ia] = cls;
    }
  }
  return grid;
}

std::string grid_to_csv(const RegionGrid& grid) {
  std::ostringstream os;
  os << "alpha,beta,class\n";
  char buf[64];
  for (int ib = 0; ib < grid.resolution_beta; ++ib) {
    for (int ia = 0; ia < grid.resolution_alpha; ++ia) {
      int cls = grid.at(ia, ib);
      std::string label = cls == 0    ? "out"
                          : cls == 1  ? "fR"
                          : cls == -1 ? "undecided"
                                      : "fS" + std::to_string(cls);
      snprintf(buf, sizeof(buf), "%.10g,%.10g,", grid.alphas[static_cast<size_t>(ia)],
               grid.betas[static_cast<size_t>(ib)]);
      os << buf << label << "\n";
    }
  }
  return os.str();
}

std::string grid_to_svg(const RegionGrid& grid, const std::vector<PolygonDisk>& disks,
                        const IntervalFamily& fam) {
  const int W = 800, H = 600;
  double alo = to_double(fam.alpha_range().lo), ahi = to_double(fam.alpha_range().hi);
  double bhi = to_double(fam.beta_bound());
  auto X = [&](double a) { return (a - alo) / (ahi - alo) * W; };
  auto Y = [&](double b) { return H - b / bhi * H; };
  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H
     << "' viewBox='0 0 " << W << " " << H << "'>\n";
  os << "<rect width='" << W << "' height='" << H << "' fill='white'/>\n";
  double cw = static_cast<double>(W) / grid.resolution_alpha + 1;
  double ch = static_cast<double>(H) / grid.resolution_beta + 1;
  char buf[256];
  for (int ib = 0; ib < grid.resolution_beta; ++ib) {
    for (int ia = 0; ia < grid.resolution_alpha; ++ia) {
      int cls = grid.at(ia, ib);
      if (cls == 0) continue;
      const char* color = cls == 1 ? "#444444" : (cls == -1 ? "#dd3333" : "#bbbbbb");
      snprintf(buf, sizeof(buf),
               "<rect x='%.2f' y='%.2f' width='%.2f' height='%.2f' fill='%s'/>\n",
               X(grid.alphas[static_cast<size_t>(ia)]) - cw / 2,
               Y(grid.betas[static_cast<size_t>(ib)]) - ch / 2, cw, ch, color);
      os << buf;
    }
  }
  for (const auto& d : disks) {
    os << "<polygon points='";
    for (const auto& p : d.vertices())
      os << X(to_double(p.x)) << "," << Y(to_double(p.y)) << " ";
    os << "' fill='none' stroke='black' stroke-dasharray='6,4'/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace hopfcert
