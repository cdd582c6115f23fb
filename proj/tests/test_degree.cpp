#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "example_families.hpp"
#include "hopfcert/degree.hpp"

using namespace hopfcert;
using namespace hopfcert::testutil;

namespace {

// roots alpha +- i: one rightward axis crossing at (0, 1)
Selector toy_rightward() {
  return Selector{{apoly({Rational(1), Rational(0), Rational(1)}),
                   apoly({Rational(0), Rational(-2)}),
                   QPoly::constant(Rational(1))}};
}

// roots -alpha +- i: leftward crossing at (0, 1)
Selector toy_leftward() {
  return Selector{{apoly({Rational(1), Rational(0), Rational(1)}),
                   apoly({Rational(0), Rational(2)}),
                   QPoly::constant(Rational(1))}};
}

PolygonDisk rect(double x0, double x1, double y0, double y1) {
  auto r = [](double v) {
    return make_rational(static_cast<long>(std::lround(v * 10000)), 10000);
  };
  return PolygonDisk({{r(x0), r(y0)}, {r(x1), r(y0)}, {r(x1), r(y1)}, {r(x0), r(y1)}});
}

PolygonDisk ex1_disk() {
  return PolygonDisk({{make_rational(-2, 5), make_rational(4, 5)},
                      {make_rational(1, 10), make_rational(4, 5)},
                      {make_rational(13, 40), make_rational(31, 50)},
                      {make_rational(27, 40), make_rational(23, 50)},
                      {make_rational(4, 5), make_rational(23, 50)},
                      {make_rational(4, 5), Rational(4)},
                      {make_rational(-2, 5), Rational(4)}});
}

}  // namespace

TEST_CASE("winding numbers around known crossings") {
  // rightward crossing counts -1 under the standard orientation, matching the
  // (t_- - t_+)/2 convention: t_- = 0, t_+ = 2 here
  WindingResult w = winding_number(toy_rightward(), rect(-0.5, 0.5, 0.5, 1.5));
  CHECK(w.winding == -1);
  CHECK(w.min_modulus > 0);

  CHECK(winding_number(toy_leftward(), rect(-0.5, 0.5, 0.5, 1.5)).winding == 1);
  CHECK(winding_number(toy_rightward(), rect(-0.5, 0.5, 2.0, 3.0)).winding == 0);
  // a zero on the boundary aborts
  CHECK_THROWS_WITH(winding_number(toy_rightward(), rect(0.0, 0.5, 0.5, 1.5)),
                    "zero too close to boundary; refine the disk");
}

TEST_CASE("winding additivity over partitions") {
  Selector sel = toy_leftward();
  PolygonDisk whole = rect(-0.5, 0.5, 0.4, 1.6);
  int total = winding_number(sel, whole).winding;
  int sum = 0;
  sum += winding_number(sel, rect(-0.5, 0.1, 0.4, 1.05)).winding;
  sum += winding_number(sel, rect(0.1, 0.5, 0.4, 1.05)).winding;
  sum += winding_number(sel, rect(-0.5, 0.1, 1.05, 1.6)).winding;
  sum += winding_number(sel, rect(0.1, 0.5, 1.05, 1.6)).winding;
  CHECK(total == sum);
}

TEST_CASE("crossing identity on the paper representatives") {
  SUBCASE("first example with the derived disk") {
    CrossingIdentity ci = crossing_identity_check(
        selector_ex1(), {make_rational(-2, 5), make_rational(4, 5)}, {ex1_disk()});
    CHECK(ci.t_minus == 2);
    CHECK(ci.t_plus == 0);
    CHECK(ci.winding_sum == 1);
    CHECK(ci.holds);
  }
  SUBCASE("second example: one disk around the double crossing at (0, 3)") {
    CrossingIdentity ci = crossing_identity_check(
        selector_ex2(), {make_rational(-1, 2), make_rational(6, 5)},
        {rect(-0.25, 0.25, 2.5, 3.5)});
    CHECK(ci.t_minus == 2);
    CHECK(ci.t_plus == 0);
    CHECK(ci.winding_sum == 1);
    CHECK(ci.holds);
  }
  SUBCASE("no crossings, no disks") {
    // roots -1 +- i for all alpha
    Selector stable{{QPoly::constant(Rational(2)), QPoly::constant(Rational(2)),
                     QPoly::constant(Rational(1))}};
    CrossingIdentity ci =
        crossing_identity_check(stable, {Rational(0), Rational(1)}, {});
    CHECK(ci.t_minus == 0);
    CHECK(ci.t_plus == 0);
    CHECK(ci.holds);
  }
  SUBCASE("non-hyperbolic endpoints are rejected") {
    // roots +-i at alpha = 0
    Selector sel = toy_leftward();
    CHECK_THROWS(crossing_identity_check(sel, {Rational(0), Rational(1)}, {}));
  }
}

TEST_CASE("root tracking on the example representatives") {
  SUBCASE("first example: axis events at beta = 1 and beta = 2 at alpha = 0") {
    RootPath path = track_roots(selector_ex1(),
                                {make_rational(-2, 5), make_rational(4, 5)}, 241);
    CHECK(path.max_vieta_residual < 1e-8);
    bool saw_b1 = false, saw_b2 = false;
    for (const auto& ev : path.events) {
      if (std::abs(ev.alpha) < 1e-6 && std::abs(ev.beta - 1) < 1e-6) saw_b1 = true;
      if (std::abs(ev.alpha) < 1e-6 && std::abs(ev.beta - 2) < 1e-6) saw_b2 = true;
    }
    CHECK(saw_b1);
    CHECK(saw_b2);
  }
  SUBCASE("second example: double contact at (0, 3)") {
    RootPath path = track_roots(selector_ex2(),
                                {make_rational(-1, 2), make_rational(6, 5)}, 241);
    int near = 0;
    for (const auto& ev : path.events)
      if (std::abs(ev.alpha) < 1e-6 && std::abs(ev.beta - 3) < 1e-5) ++near;
    CHECK(near >= 2);  // one crossing branch, one touching branch
  }
  SUBCASE("constant Hurwitz selector: nothing happens") {
    Selector stable{{QPoly::constant(Rational(2)), QPoly::constant(Rational(2)),
                     QPoly::constant(Rational(1))}};
    RootPath path = track_roots(stable, {Rational(0), Rational(1)}, 41);
    CHECK(path.events.empty());
    CHECK(path.sliding.empty());
  }
  SUBCASE("sliding selector is flagged") {
    // lambda^2 + (1 + alpha^2): purely imaginary for all alpha
    Selector slide{{apoly({Rational(1), Rational(0), Rational(1)}), QPoly(),
                    QPoly::constant(Rational(1))}};
    RootPath path = track_roots(slide, {Rational(-1), Rational(1)}, 41);
    REQUIRE(!path.sliding.empty());
    CHECK(path.sliding.front().alpha_begin <= -0.9);
    CHECK(path.sliding.front().alpha_end >= 0.9);
  }
  CHECK_THROWS(track_roots(toy_leftward(), {Rational(0), Rational(1)}, 1));
}

TEST_CASE("resonance detection") {
  SUBCASE("first example reports the 2:1 resonance at (0, 1)") {
    RootPath path = track_roots(selector_ex1(),
                                {make_rational(-2, 5), make_rational(4, 5)}, 241);
    auto res = find_resonances(path, 4);
    REQUIRE(!res.empty());
    bool found = false;
    for (const auto& r : res)
      if (r.j == 2 && std::abs(r.alpha) < 1e-6 && std::abs(r.beta_small - 1) < 1e-6)
        found = true;
    CHECK(found);
  }
  SUBCASE("third example has a single imaginary pair and no resonance") {
    RootPath path = track_roots(selector_ex3(),
                                {make_rational(-1, 10), make_rational(9, 100)}, 121);
    CHECK(find_resonances(path, 6).empty());
  }
  SUBCASE("sliding 2:1 pair is found by the overlap scan") {
    // factors lambda^2 + 1 and lambda^2 + (2 + alpha)^2: frequencies 1 and
    // 2 + alpha slide along the axis; ratio 2 exactly at alpha = 0
    Selector sel = Selector::from_factors(
        {{apoly({Rational(1)}), QPoly(), QPoly::constant(Rational(1))},
         {apoly({Rational(4), Rational(4), Rational(1)}), QPoly(),
          QPoly::constant(Rational(1))}});
    RootPath path = track_roots(sel, {make_rational(-1, 2), make_rational(1, 2)}, 81);
    auto res = find_resonances(path, 3);
    bool found = false;
    for (const auto& r : res)
      if (r.j == 2 && std::abs(r.alpha) < 1e-6 && std::abs(r.beta_small - 1) < 1e-6)
        found = true;
    CHECK(found);
  }
}

TEST_CASE("winding equals the signed dense-tracking count on random setups") {
  std::mt19937_64 rng(60902);
  std::uniform_int_distribution<int> pos(-8, 8);
  int done = 0;
  while (done < 60) {
    // product of quadratics lambda^2 - 2 c (a - r) lambda + (c (a - r))^2 + w^2
    int nq = 1 + static_cast<int>(rng() % 3);
    std::vector<std::vector<QPoly>> factors;
    std::vector<std::tuple<double, double, int>> crossings;  // (r, w, direction)
    bool ok = true;
    for (int f = 0; f < nq; ++f) {
      Rational r = make_rational(pos(rng), 10);          // crossing alpha
      Rational w = make_rational(10 + f * 7 + (int)(rng() % 5), 10);  // frequency
      Rational c = make_rational(pos(rng) >= 0 ? 1 : -1, 1);
      QPoly tau = apoly({-c * r, c});  // c (a - r)
      // lambda^2 - 2 tau lambda + tau^2 + w^2
      factors.push_back({tau * tau + QPoly::constant(w * w),
                         Rational(-2) * tau, QPoly::constant(Rational(1))});
      crossings.emplace_back(to_double(r), to_double(w), sign(c));
    }
    for (size_t i = 0; i < crossings.size() && ok; ++i)
      for (size_t k = i + 1; k < crossings.size() && ok; ++k)
        if (std::abs(std::get<0>(crossings[i]) - std::get<0>(crossings[k])) < 0.15 ||
            std::abs(std::get<1>(crossings[i]) - std::get<1>(crossings[k])) < 0.3)
          ok = false;
    if (!ok) continue;
    Selector sel = Selector::from_factors(factors);

    // random rectangle with boundary clearance from all crossing points
    double x0 = pos(rng) / 8.0 - 0.9, x1 = x0 + 0.3 + (rng() % 100) / 60.0;
    double y0 = 0.2 + (rng() % 60) / 40.0, y1 = y0 + 0.4 + (rng() % 80) / 50.0;
    bool clear = true;
    for (auto& [r, w, c] : crossings) {
      double dx = std::min(std::abs(r - x0), std::abs(r - x1));
      double dy = std::min(std::abs(w - y0), std::abs(w - y1));
      bool inside_x = x0 < r && r < x1, inside_y = y0 < w && w < y1;
      if ((inside_x && dy < 0.05 && !(inside_y)) || (inside_y && dx < 0.05 && !inside_x))
        clear = false;
      if (dx < 0.05 && dy < 0.05) clear = false;
      if ((inside_x && !inside_y && dy < 0.05) || (!inside_x && inside_y && dx < 0.05))
        clear = false;
    }
    if (!clear) continue;
    ++done;
    int expected = 0;
    for (auto& [r, w, c] : crossings)
      if (x0 < r && r < x1 && y0 < w && w < y1) expected += -c;
    WindingResult wres = winding_number(sel, rect(x0, x1, y0, y1));
    CHECK(wres.winding == expected);
  }
}

TEST_CASE("crossing identity holds on random hyperbolic selectors") {
  std::mt19937_64 rng(171717);
  std::uniform_int_distribution<int> pos(-7, 7);
  int done = 0;
  while (done < 40) {
    int nq = 1 + static_cast<int>(rng() % 3);
    std::vector<std::vector<QPoly>> factors;
    std::vector<std::pair<double, double>> pts;
    bool ok = true;
    for (int f = 0; f < nq && ok; ++f) {
      Rational r = make_rational(pos(rng), 10);
      Rational w = make_rational(10 + f * 9 + (int)(rng() % 6), 10);
      Rational c = make_rational(pos(rng) >= 0 ? 1 : -1, 1);
      if (rational_abs(r) > make_rational(8, 10)) ok = false;
      QPoly tau = apoly({-c * r, c});
      factors.push_back({tau * tau + QPoly::constant(w * w), Rational(-2) * tau,
                         QPoly::constant(Rational(1))});
      pts.emplace_back(to_double(r), to_double(w));
    }
    if (!ok) continue;
    // a real factor that never crosses keeps the degree odd sometimes
    if (rng() % 2 == 0)
      factors.push_back({QPoly::constant(Rational(3)), QPoly::constant(Rational(1))});
    for (size_t i = 0; i < pts.size() && ok; ++i)
      for (size_t k = i + 1; k < pts.size() && ok; ++k)
        if (std::abs(pts[i].first - pts[k].first) < 0.15 ||
            std::abs(pts[i].second - pts[k].second) < 0.3)
          ok = false;
    if (!ok) continue;
    Selector sel = Selector::from_factors(factors);
    RationalInterval range{Rational(-1), Rational(1)};
    if (root_count(sel.at(range.lo)).n_imag != 0 ||
        root_count(sel.at(range.hi)).n_imag != 0)
      continue;
    std::vector<PolygonDisk> disks;
    for (auto& [r, w] : pts) disks.push_back(rect(r - 0.07, r + 0.07, w - 0.14, w + 0.14));
    ++done;
    CrossingIdentity ci = crossing_identity_check(sel, range, disks);
    CHECK(ci.holds);
  }
}

TEST_CASE("root path CSV export") {
  RootPath path = track_roots(toy_leftward(), {Rational(0), Rational(1)}, 5);
  std::string csv = root_path_to_csv(path);
  CHECK(csv.substr(0, 22) == "alpha,re,im,branch_id\n");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * 5);
}
