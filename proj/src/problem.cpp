#include "hopfcert/problem.hpp"

#include <fstream>

#include "hopfcert/expr.hpp"

namespace hopfcert {

std::string to_string(R5Mode mode) {
  switch (mode) {
    case R5Mode::disks:
      return "disks";
    case R5Mode::non_resonance:
      return "non_resonance";
    default:
      return "descartes";
  }
}

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("problem file: " + what);
}

Rational rational_field(const json& v, const std::string& what) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
      fail(what + ": " + e.what());
    }
  }
  fail(what + " must be an integer or a rational string");
}

QPoly expr_field(const json& v, const std::string& what) {
  if (v.is_number_integer()) return QPoly::constant(Rational(v.get<long>()));
  if (!v.is_string()) fail(what + " must be an expression string");
  try {
    return parse_expr(v.get<std::string>());
  } catch (const std::exception& e) {
    fail(what + ": " + e.what());
  }
}

CoeffInterval coeff_field(const json& v, int degree) {
  std::string what = "coefficient " + std::to_string(degree);
  if (v.is_string() || v.is_number_integer()) {
    QPoly p = expr_field(v, what);
    return {p, p};
  }
  if (!v.is_object()) fail(what + " must be a string or an object");
  if (v.contains("lo") || v.contains("hi")) {
    if (!v.contains("lo") || !v.contains("hi")) fail(what + " needs both lo and hi");
    return {expr_field(v.at("lo"), what + ".lo"), expr_field(v.at("hi"), what + ".hi")};
  }
  if (v.contains("center")) {
    QPoly center = expr_field(v.at("center"), what + ".center");
    Rational half(0);
    if (v.contains("halfwidth"))
      half = rational_field(v.at("halfwidth"), what + ".halfwidth");
    if (half < 0) fail(what + ".halfwidth must be nonnegative");
    QPoly w = QPoly::constant(half);
    return {center - w, center + w};
  }
  fail(what + " needs lo/hi or center/halfwidth");
}

}  // namespace

ProblemSpec parse_problem(const nlohmann::json& doc) {
  if (!doc.is_object()) fail("document must be a JSON object");
  for (const char* key : {"degree", "alpha_range", "coefficients", "representative", "r5"})
    if (!doc.contains(key)) fail(std::string("missing field '") + key + "'");

  int degree = doc.at("degree").is_number_integer() ? doc.at("degree").get<int>() : -1;
  if (degree < 1 || degree > 64) fail("degree must be an integer in [1, 64]");

  const json& ar = doc.at("alpha_range");
  if (!ar.is_array() || ar.size() != 2) fail("alpha_range must be [lo, hi]");
  Rational alo = rational_field(ar[0], "alpha_range.lo");
  Rational ahi = rational_field(ar[1], "alpha_range.hi");
  if (alo >= ahi) fail("alpha_range must satisfy lo < hi");

  const json& coeffs = doc.at("coefficients");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != degree)
    fail("coefficients must list exactly `degree` entries (degrees 0..n-1)");
  std::vector<CoeffInterval> cis;
  for (int k = 0; k < degree; ++k) cis.push_back(coeff_field(coeffs[static_cast<size_t>(k)], k));

  ProblemSpec spec{doc.value("name", std::string{}),
                   IntervalFamily(std::move(cis), {alo, ahi}),
                   Selector{},
                   R5Payload{},
                   doc.value("nonlinearity", std::string{}),
                   Limits{}};

  const json& rep = doc.at("representative");
  std::vector<std::vector<QPoly>> factors;
  if (rep.is_object() && rep.contains("factors")) {
    for (const auto& f : rep.at("factors")) {
      if (!f.is_array() || f.empty()) fail("representative factor must be a coefficient list");
      std::vector<QPoly> fac;
      for (const auto& c : f) fac.push_back(expr_field(c, "representative coefficient"));
      factors.push_back(std::move(fac));
    }
  } else if (rep.is_array()) {
    std::vector<QPoly> fac;
    for (const auto& c : rep) fac.push_back(expr_field(c, "representative coefficient"));
    factors.push_back(std::move(fac));
  } else {
    fail("representative must be a coefficient list or {factors: [...]}");
  }
  spec.representative = Selector::from_factors(factors);
  if (spec.representative.degree() != degree)
    fail("representative degree " + std::to_string(spec.representative.degree()) +
         " does not match the family degree " + std::to_string(degree));
  if (!selector_in_family(spec.representative, spec.family))
    fail("representative is not a member of the family on the alpha range");

  const json& r5 = doc.at("r5");
  if (!r5.is_object() || !r5.contains("mode")) fail("r5 needs a mode");
  std::string mode = r5.at("mode").get<std::string>();
  if (mode == "disks") {
    spec.r5.mode = R5Mode::disks;
    if (!r5.contains("disks") || !r5.at("disks").is_array() || r5.at("disks").empty())
      fail("r5 mode 'disks' needs a nonempty disks array");
    for (const auto& d : r5.at("disks")) {
      if (!d.is_array() || d.size() < 3) fail("each disk needs at least 3 vertices");
      std::vector<Point2> verts;
      for (const auto& v : d) {
        if (!v.is_array() || v.size() != 2) fail("disk vertex must be [alpha, beta]");
        verts.push_back({rational_field(v[0], "disk vertex alpha"),
                         rational_field(v[1], "disk vertex beta")});
      }
      try {
        spec.r5.disks.emplace_back(std::move(verts));
      } catch (const std::exception& e) {
        fail(std::string("invalid disk: ") + e.what());
      }
    }
  } else if (mode == "non_resonance") {
    spec.r5.mode = R5Mode::non_resonance;
  } else if (mode == "descartes") {
    spec.r5.mode = R5Mode::descartes;
    if (!r5.contains("Q") || !r5.contains("R"))
      fail("r5 mode 'descartes' needs multipliers Q and R");
    spec.r5.multiplier_q = expr_field(r5.at("Q"), "r5.Q");
    spec.r5.multiplier_r = expr_field(r5.at("R"), "r5.R");
  } else {
    fail("unknown r5 mode '" + mode + "'");
  }

  if (doc.contains("limits")) {
    const json& lim = doc.at("limits");
    spec.limits.depth_limit = lim.value("depth_limit", 24);
    spec.limits.jmax = lim.value("jmax", 0);
    spec.limits.root_grid = lim.value("root_grid", 241);
    if (spec.limits.depth_limit < 1) fail("limits.depth_limit must be positive");
  }
  return spec;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in, nullptr, true, true);  // allow comments
  } catch (const std::exception& e) {
    throw std::runtime_error("problem file: invalid JSON: " + std::string(e.what()));
  }
  return parse_problem(doc);
}

}  // namespace hopfcert
