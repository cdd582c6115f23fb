#include "hopfcert/pipeline.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>

#include "hopfcert/degree.hpp"
#include "hopfcert/descartes.hpp"
#include "hopfcert/expr.hpp"
#include "hopfcert/regions.hpp"

namespace hopfcert {

namespace {

using ordered_json = nlohmann::ordered_json;

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::string fmt_double(double v) {
  char buf[64];
  snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

ordered_json point_json(const Point2& p) {
  return ordered_json::array({to_string(p.x), to_string(p.y)});
}

ordered_json qinstability_json(const QInstability& q) {
  ordered_json out;
  out["verdict"] = to_string(q.verdict);
  out["representative"] = expr_to_string(q.representative);  // polynomial in lambda
  out["omega_bound"] = to_string(q.omega_bound);
  if (q.verdict == CertVerdict::certified) {
    out["q"] = q.q;
    ordered_json cells = ordered_json::array();
    for (const auto& c : q.exclusion_evidence) {
      ordered_json cell;
      cell["omega"] = ordered_json::array({to_string(c.span.lo), to_string(c.span.hi)});
      cell["positive"] = c.positive_factor == 1 ? "w1" : "w2";
      cells.push_back(cell);
    }
    out["exclusion_evidence"] = cells;
  }
  if (q.witness_omega) {
    out["witness_omega"] = to_string(*q.witness_omega);
    out["witness_member"] = expr_to_string(*q.witness_member);
  }
  if (q.touch_bracket)
    out["touch_bracket"] = ordered_json::array(
        {to_string(q.touch_bracket->lo), to_string(q.touch_bracket->hi)});
  if (!q.note.empty()) out["note"] = q.note;
  return out;
}

ordered_json bnb_json(const BnbReport& rep) {
  ordered_json out;
  out["verdict"] = to_string(rep.verdict);
  if (rep.witness) out["witness"] = point_json(*rep.witness);
  out["boxes_processed"] = rep.boxes_processed;
  out["max_depth_reached"] = rep.max_depth_reached;
  if (!rep.unresolved.empty()) {
    ordered_json boxes = ordered_json::array();
    for (const auto& b : rep.unresolved) {
      boxes.push_back(ordered_json::array(
          {to_string(b.alpha.lo), to_string(b.alpha.hi), to_string(b.beta.lo),
           to_string(b.beta.hi)}));
      if (boxes.size() >= 8) break;
    }
    out["unresolved_boxes"] = boxes;
  }
  return out;
}

struct ConditionOutcome {
  CertVerdict verdict = CertVerdict::inconclusive;
  ordered_json detail;
};

}  // namespace

int exit_code_for(CertVerdict v) {
  switch (v) {
    case CertVerdict::certified:
      return 0;
    case CertVerdict::refuted:
      return 2;
    default:
      return 3;
  }
}

Certificate verify(const ProblemSpec& spec) {
  ordered_json doc;
  doc["schema"] = "hopfcert.certificate/1";
  doc["name"] = spec.name;
  {
    ordered_json prob;
    prob["degree"] = spec.family.degree();
    prob["alpha_range"] = ordered_json::array(
        {to_string(spec.family.alpha_range().lo), to_string(spec.family.alpha_range().hi)});
    prob["r5_mode"] = to_string(spec.r5.mode);
    ordered_json rep = ordered_json::array();
    for (const auto& c : spec.representative.coeffs) rep.push_back(expr_to_string(c));
    prob["representative_coeffs_in_alpha"] = rep;
    doc["problem"] = prob;
  }

  ordered_json timings;
  std::vector<std::pair<std::string, ConditionOutcome>> normative;

  // (R2)
  {
    double t0 = now_ms();
    ConditionOutcome out;
    R2Result r2 = check_R2(spec.family);
    out.verdict = r2.verdict;
    out.detail["statement"] = "0 is excluded from [a0(alpha), b0(alpha)] on the range";
    if (r2.witness_alpha) out.detail["witness_alpha"] = to_string(*r2.witness_alpha);
    if (r2.touch_bracket)
      out.detail["touch_bracket"] = ordered_json::array(
          {to_string(r2.touch_bracket->lo), to_string(r2.touch_bracket->hi)});
    normative.emplace_back("R2", std::move(out));
    timings["R2"] = now_ms() - t0;
  }

  // (R3) and (R4): endpoint q-instability with distinct counts
  {
    double t0 = now_ms();
    ConditionOutcome r3, r4;
    r3.detail["statement"] = "the family at alpha_- is q1-unstable";
    r4.detail["statement"] = "the family at alpha_+ is q2-unstable with q2 != q1";
    try {
      R3R4Result rr = check_R3_R4(
          spec.family, spec.representative.at(spec.family.alpha_range().lo),
          spec.representative.at(spec.family.alpha_range().hi));
      r3.verdict = rr.minus.verdict;
      r3.detail["certification"] = qinstability_json(rr.minus);
      r4.detail["certification"] = qinstability_json(rr.plus);
      if (rr.plus.verdict == CertVerdict::certified &&
          rr.minus.verdict == CertVerdict::certified && rr.minus.q == rr.plus.q) {
        r4.verdict = CertVerdict::refuted;
        r4.detail["note"] = "both endpoints certified with the same q";
      } else {
        r4.verdict = rr.plus.verdict;
      }
    } catch (const std::exception& e) {
      r3.verdict = CertVerdict::inconclusive;
      r4.verdict = CertVerdict::inconclusive;
      r3.detail["error"] = e.what();
      r4.detail["error"] = e.what();
    }
    normative.emplace_back("R3", std::move(r3));
    normative.emplace_back("R4", std::move(r4));
    timings["R3_R4"] = now_ms() - t0;
  }

  // the selected (R5) condition
  {
    double t0 = now_ms();
    ConditionOutcome out;
    std::string id;
    try {
      switch (spec.r5.mode) {
        case R5Mode::disks: {
          id = "R5'";
          out.detail["statement"] =
              "the disks cover fR and their boundaries avoid every fS_j";
          R5pResult r = certify_R5p(spec.family, spec.r5.disks, spec.limits.jmax,
                                    spec.limits.depth_limit);
          out.detail["coverage"] = bnb_json(r.coverage);
          out.detail["boundary"] = to_string(r.boundary);
          if (!r.boundary_issues.empty()) {
            ordered_json issues = ordered_json::array();
            for (const auto& is : r.boundary_issues) {
              ordered_json one;
              one["disk"] = is.disk;
              one["edge"] = is.edge;
              if (is.j > 0) one["j"] = is.j;
              if (is.witness) one["point"] = point_json(is.point);
              one["note"] = is.note;
              issues.push_back(one);
            }
            out.detail["boundary_issues"] = issues;
          }
          out.detail["jmax_used"] = r.jmax_used;
          out.detail["beta_band"] = ordered_json::array(
              {to_string(r.context.beta_min), to_string(r.context.beta_max)});
          if (r.certified)
            out.verdict = CertVerdict::certified;
          else if (r.coverage.verdict == BnbReport::Verdict::nonempty_with_witness ||
                   r.boundary == CertVerdict::refuted)
            out.verdict = CertVerdict::refuted;
          else
            out.verdict = CertVerdict::inconclusive;
          break;
        }
        case R5Mode::non_resonance: {
          id = "R5''";
          out.detail["statement"] = "fR does not meet the shadow union fS";
          R5ppResult r = certify_R5pp(spec.family, spec.limits.jmax,
                                      spec.limits.depth_limit);
          out.detail["search"] = bnb_json(r.report);
          out.detail["jmax_used"] = r.jmax_used;
          if (r.failed_j > 0) out.detail["failed_j"] = r.failed_j;
          out.detail["beta_band"] = ordered_json::array(
              {to_string(r.context.beta_min), to_string(r.context.beta_max)});
          if (r.report.verdict == BnbReport::Verdict::certified_empty)
            out.verdict = CertVerdict::certified;
          else if (r.report.verdict == BnbReport::Verdict::nonempty_with_witness)
            out.verdict = CertVerdict::refuted;
          else
            out.verdict = CertVerdict::inconclusive;
          break;
        }
        case R5Mode::descartes: {
          id = "R5'''";
          out.detail["statement"] =
              "every member has at most one pair of purely imaginary roots";
          R5DescartesResult r =
              check_R5ppp(spec.family, spec.r5.multiplier_q, spec.r5.multiplier_r);
          out.verdict = r.verdict;
          out.detail["Q"] = expr_to_string(spec.r5.multiplier_q);
          out.detail["R"] = expr_to_string(spec.r5.multiplier_r);
          ordered_json tpoly = ordered_json::array();
          for (int k = 0; k <= r.T.degree(); ++k) {
            const CoeffInterval& ci = r.T.coeffs[static_cast<size_t>(k)];
            if (ci.lo.is_zero() && ci.hi.is_zero()) continue;
            ordered_json c;
            c["omega_degree"] = k;
            c["lo"] = expr_to_string(ci.lo);
            c["hi"] = expr_to_string(ci.hi);
            tpoly.push_back(c);
          }
          out.detail["T"] = tpoly;
          if (r.pattern.at_most_one) out.detail["pivot"] = r.pattern.pivot;
          if (r.offending_degree >= 0) {
            out.detail["offending_degree"] = r.offending_degree;
            if (r.offending_alpha)
              out.detail["offending_alpha"] = ordered_json::array(
                  {to_string(r.offending_alpha->lo), to_string(r.offending_alpha->hi)});
          }
          if (!r.note.empty()) out.detail["note"] = r.note;
          break;
        }
      }
    } catch (const std::exception& e) {
      out.verdict = CertVerdict::inconclusive;
      out.detail["error"] = e.what();
    }
    normative.emplace_back(id.empty() ? "R5" : id, std::move(out));
    timings["R5"] = now_ms() - t0;
  }

  CertVerdict overall = CertVerdict::certified;
  for (const auto& [id, out] : normative) {
    if (out.verdict == CertVerdict::refuted) {
      overall = CertVerdict::refuted;
      break;
    }
    if (out.verdict != CertVerdict::certified) overall = CertVerdict::inconclusive;
  }
  doc["overall"] = to_string(overall);
  if (overall == CertVerdict::certified)
    doc["conclusion"] =
        "every selector of the interval system has a branch of non-constant "
        "periodic solutions bifurcating from the trivial solution, conditional "
        "on the declared nonlinearity assumptions (R0), (R1)";

  ordered_json conditions = ordered_json::array();
  {
    ordered_json r0;
    r0["id"] = "R0";
    r0["verdict"] = "assumed (user-declared)";
    r0["statement"] = spec.nonlinearity.empty() ? "(no declaration provided)"
                                                : spec.nonlinearity;
    conditions.push_back(r0);
    ordered_json r1;
    r1["id"] = "R1";
    r1["verdict"] = "assumed (user-declared)";
    r1["statement"] =
        "the nonlinearity is o(|x|) near 0, uniformly in alpha (declared, not "
        "machine-checkable)";
    conditions.push_back(r1);
  }
  for (auto& [id, out] : normative) {
    ordered_json c;
    c["id"] = id;
    c["verdict"] = to_string(out.verdict);
    for (auto& [k, v] : out.detail.items()) c[k] = v;
    conditions.push_back(c);
  }
  doc["conditions"] = conditions;
  doc["assumptions"]["nonlinearity"] =
      spec.nonlinearity.empty() ? "(no declaration provided)" : spec.nonlinearity;

  // non-normative validator section on the representative selector
  {
    double t0 = now_ms();
    ordered_json val;
    val["normative"] = false;
    try {
      RootPath path = track_roots(spec.representative, spec.family.alpha_range(),
                                  spec.limits.root_grid);
      ordered_json events = ordered_json::array();
      for (const auto& ev : path.events) {
        ordered_json e;
        e["branch"] = ev.branch;
        e["alpha"] = fmt_double(ev.alpha);
        e["beta"] = fmt_double(ev.beta);
        e["kind"] = ev.crossing ? "crossing" : "contact";
        events.push_back(e);
      }
      val["axis_events"] = events;
      ordered_json slides = ordered_json::array();
      for (const auto& sl : path.sliding) {
        ordered_json s;
        s["branch"] = sl.branch;
        s["alpha"] = ordered_json::array(
            {fmt_double(sl.alpha_begin), fmt_double(sl.alpha_end)});
        slides.push_back(s);
      }
      val["sliding_intervals"] = slides;
      val["max_vieta_residual"] = fmt_double(path.max_vieta_residual);
      ordered_json reso = ordered_json::array();
      for (const auto& r : find_resonances(path, 9)) {
        ordered_json one;
        one["alpha"] = fmt_double(r.alpha);
        one["beta_small"] = fmt_double(r.beta_small);
        one["j"] = r.j;
        reso.push_back(one);
      }
      val["resonances"] = reso;

      // crossing identity over the user disks, or auto boxes around events
      std::vector<PolygonDisk> disks = spec.r5.disks;
      if (disks.empty()) {
        std::vector<std::pair<double, double>> centers;
        for (const auto& ev : path.events) {
          bool merged = false;
          for (auto& c : centers)
            if (std::abs(c.first - ev.alpha) < 0.02 && std::abs(c.second - ev.beta) < 0.05) {
              merged = true;
              break;
            }
          if (!merged) centers.emplace_back(ev.alpha, ev.beta);
        }
        auto rat = [](double v) {
          return make_rational(static_cast<long>(std::lround(v * 100000)), 100000);
        };
        double alo = to_double(spec.family.alpha_range().lo);
        double ahi = to_double(spec.family.alpha_range().hi);
        for (auto& [ca, cb] : centers) {
          double wx = std::min({0.05, (ahi - alo) / 10});
          double x0 = std::max(alo, ca - wx), x1 = std::min(ahi, ca + wx);
          disks.emplace_back(std::vector<Point2>{{rat(x0), rat(cb - 0.1)},
                                                 {rat(x1), rat(cb - 0.1)},
                                                 {rat(x1), rat(cb + 0.1)},
                                                 {rat(x0), rat(cb + 0.1)}});
        }
      }
      CrossingIdentity ci =
          crossing_identity_check(spec.representative, spec.family.alpha_range(), disks);
      ordered_json cij;
      cij["t_minus"] = ci.t_minus;
      cij["t_plus"] = ci.t_plus;
      cij["winding_sum"] = ci.winding_sum;
      ordered_json per = ordered_json::array();
      for (const auto& w : ci.per_disk) {
        ordered_json one;
        one["winding"] = w.winding;
        one["min_boundary_modulus"] = fmt_double(w.min_modulus);
        one["refinement_depth"] = w.refinement_depth;
        per.push_back(one);
      }
      cij["per_disk"] = per;
      cij["identity_holds"] = ci.holds;
      val["crossing_identity"] = cij;
    } catch (const std::exception& e) {
      val["skipped"] = e.what();
    }
    doc["validators"] = val;
    timings["validators"] = now_ms() - t0;
  }

  {
    ordered_json params;
    params["depth_limit"] = spec.limits.depth_limit;
    params["jmax"] = spec.limits.jmax;
    params["root_grid"] = spec.limits.root_grid;
    doc["parameters"] = params;
  }
  doc["timings_ms"] = timings;

  Certificate cert;
  cert.overall = overall;
  cert.text = doc.dump(2) + "\n";
  return cert;
}

std::string strip_volatile(const std::string& certificate_text) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::parse(certificate_text);
  doc.erase("timings_ms");
  return doc.dump(2) + "\n";
}

}  // namespace hopfcert
