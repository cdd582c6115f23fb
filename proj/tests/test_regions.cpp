#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "example_families.hpp"
#include "hopfcert/regions.hpp"

using namespace hopfcert;
using namespace hopfcert::testutil;

namespace {

PolygonDisk ex1_disk() {
  return PolygonDisk({{make_rational(-2, 5), make_rational(4, 5)},
                      {make_rational(1, 10), make_rational(4, 5)},
                      {make_rational(13, 40), make_rational(31, 50)},
                      {make_rational(27, 40), make_rational(23, 50)},
                      {make_rational(4, 5), make_rational(23, 50)},
                      {make_rational(4, 5), Rational(4)},
                      {make_rational(-2, 5), Rational(4)}});
}

bool in_fR(const SignPair& sp, const Rational& a, const Rational& b) {
  return sign(sp.w1.eval(a, b)) <= 0 && sign(sp.w2.eval(a, b)) <= 0;
}

}  // namespace

TEST_CASE("polygon predicates") {
  PolygonDisk tri({{Rational(0), Rational(0)}, {Rational(4), Rational(0)},
                   {Rational(0), Rational(4)}});
  CHECK(tri.locate({Rational(1), Rational(1)}) == PointLocation::inside);
  CHECK(tri.locate({Rational(2), Rational(2)}) == PointLocation::boundary);
  CHECK(tri.locate({Rational(3), Rational(3)}) == PointLocation::outside);
  CHECK(tri.contains_box(Box2{{make_rational(1, 2), Rational(1)},
                              {make_rational(1, 2), Rational(1)}}));
  CHECK(!tri.contains_box(Box2{{Rational(1), Rational(4)}, {Rational(1), Rational(2)}}));
  // clockwise input is reoriented
  PolygonDisk cw({{Rational(0), Rational(0)}, {Rational(0), Rational(4)},
                  {Rational(4), Rational(0)}});
  CHECK(cw.locate({Rational(1), Rational(1)}) == PointLocation::inside);
  CHECK_THROWS(PolygonDisk({{Rational(0), Rational(0)}, {Rational(2), Rational(2)},
                            {Rational(2), Rational(0)}, {Rational(0), Rational(2)}}));
  PolygonDisk far({{Rational(10), Rational(0)}, {Rational(12), Rational(0)},
                   {Rational(11), Rational(2)}});
  CHECK(polygons_disjoint(tri, far));
  CHECK(!polygons_disjoint(tri, cw));
}

TEST_CASE("region context certifies sound beta strips") {
  IntervalFamily fam = family_ex1();
  RegionContext ctx = make_region_context(fam, 24);
  CHECK(ctx.beta_bound == fam.beta_bound());
  CHECK(ctx.beta_min > 0);
  CHECK(ctx.beta_min < Rational(1));
  CHECK(ctx.beta_max <= ctx.beta_bound);
  CHECK(ctx.jmax_default >= 2);

  // beta_min soundness: no fR point below the certified strip height
  SignPair sp = sign_pair(fam);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(0, 10000);
  for (int t = 0; t < 10000; ++t) {
    Rational a = fam.alpha_range().lo +
                 make_rational(num(rng), 10000) * fam.alpha_range().width();
    Rational b = ctx.beta_min * make_rational(num(rng), 10000);
    CHECK(!in_fR(sp, a, b));
  }
}

TEST_CASE("R5'' on the paper families") {
  SUBCASE("first example has a 2:1 resonance witness") {
    R5ppResult r = certify_R5pp(family_ex1(), 0, 24);
    REQUIRE(r.report.verdict == BnbReport::Verdict::nonempty_with_witness);
    CHECK(r.failed_j == 2);
    REQUIRE(r.report.witness.has_value());
    SignPair sp = sign_pair(family_ex1());
    const Point2& w = *r.report.witness;
    CHECK(in_fR(sp, w.x, w.y));
    CHECK(in_fR(sp, w.x, Rational(2) * w.y));
    // the witness sits in the known resonance zone around (0, 1)
    CHECK(rational_abs(w.x) < make_rational(3, 20));
    CHECK(rational_abs(w.y - 1) < make_rational(3, 20));
  }
  SUBCASE("third example certifies R5'' as well") {
    R5ppResult r = certify_R5pp(family_ex3(), 0, 24);
    CHECK(r.report.verdict == BnbReport::Verdict::certified_empty);
  }
  SUBCASE("verdicts are stable under a deeper limit") {
    R5ppResult shallow = certify_R5pp(family_ex1(), 3, 10);
    R5ppResult deep = certify_R5pp(family_ex1(), 3, 14);
    CHECK(shallow.report.verdict == BnbReport::Verdict::nonempty_with_witness);
    CHECK(deep.report.verdict == shallow.report.verdict);
  }
  SUBCASE("empty fR certifies trivially") {
    // all members Hurwitz with a margin: (l+1)^2 widened slightly
    QPoly one = QPoly::constant(Rational(1));
    QPoly two = QPoly::constant(Rational(2));
    Rational w = make_rational(1, 10);
    IntervalFamily fam({{one - QPoly::constant(w), one + QPoly::constant(w)},
                        {two - QPoly::constant(w), two + QPoly::constant(w)}},
                       {Rational(0), Rational(1)});
    R5ppResult r = certify_R5pp(fam, 0, 24);
    CHECK(r.report.verdict == BnbReport::Verdict::certified_empty);
  }
  SUBCASE("R2 is a precondition") {
    QPoly a = apoly({Rational(0), Rational(1)});
    QPoly b = apoly({Rational(1), Rational(1)});
    IntervalFamily fam({{a, b}, point_coeff(QPoly::constant(Rational(1)))},
                       {make_rational(-1, 2), make_rational(1, 2)});
    CHECK_THROWS_WITH(certify_R5pp(fam, 0, 8), "R2 must hold before region analysis");
  }
}

TEST_CASE("R5' certification with the derived disk") {
  IntervalFamily fam = family_ex1();
  SUBCASE("the derived polygon certifies both clauses") {
    R5pResult r = certify_R5p(fam, {ex1_disk()}, 0, 24);
    CHECK(r.coverage.verdict == BnbReport::Verdict::certified_empty);
    CHECK(r.boundary == CertVerdict::certified);
    CHECK(r.certified);
  }
  SUBCASE("a shrunk disk misses part of fR") {
    // cut the disk off below beta = 2: the upper fR component escapes
    PolygonDisk low({{make_rational(-2, 5), make_rational(4, 5)},
                     {make_rational(4, 5), make_rational(4, 5)},
                     {make_rational(4, 5), Rational(2)},
                     {make_rational(-2, 5), Rational(2)}});
    R5pResult r = certify_R5p(fam, {low}, 2, 18);
    CHECK(r.coverage.verdict == BnbReport::Verdict::nonempty_with_witness);
    REQUIRE(r.coverage.witness.has_value());
    SignPair sp = sign_pair(fam);
    CHECK(in_fR(sp, r.coverage.witness->x, r.coverage.witness->y));
    CHECK(low.locate(*r.coverage.witness) == PointLocation::outside);
    CHECK(!r.certified);
  }
  SUBCASE("a huge disk catches fS on its boundary") {
    PolygonDisk huge({{make_rational(-2, 5), make_rational(1, 10)},
                      {make_rational(4, 5), make_rational(1, 10)},
                      {make_rational(4, 5), Rational(4)},
                      {make_rational(-2, 5), Rational(4)}});
    R5pResult r = certify_R5p(fam, {huge}, 0, 14);
    CHECK(r.boundary == CertVerdict::refuted);
    REQUIRE(!r.boundary_issues.empty());
    bool witnessed = false;
    SignPair sp = sign_pair(fam);
    for (const auto& issue : r.boundary_issues) {
      if (!issue.witness) continue;
      witnessed = true;
      CHECK(in_fR(sp, issue.point.x, Rational(issue.j) * issue.point.y));
    }
    CHECK(witnessed);
    CHECK(!r.certified);
  }
  SUBCASE("overlapping disks are rejected") {
    PolygonDisk a({{Rational(0), Rational(1)}, {Rational(1), Rational(1)},
                   {Rational(1), Rational(2)}, {Rational(0), Rational(2)}});
    PolygonDisk b({{make_rational(1, 2), Rational(1)}, {Rational(1), Rational(3)},
                   {make_rational(1, 4), Rational(3)}});
    CHECK_THROWS_WITH(certify_R5p(fam, {a, b}, 2, 8), "overlapping disks");
  }
  SUBCASE("disks outside the strip are rejected") {
    PolygonDisk out({{Rational(2), Rational(1)}, {Rational(3), Rational(1)},
                     {Rational(3), Rational(2)}});
    CHECK_THROWS_WITH(certify_R5p(fam, {out}, 2, 8),
                      "disk escapes the alpha/beta strip");
  }
}

TEST_CASE("no axis-aligned rectangle satisfies R5' for the first example") {
  CHECK(!search_rectangle(family_ex1(), 6, 14).has_value());
}

TEST_CASE("discard soundness of the box ranges") {
  std::mt19937_64 rng(23);
  SignPair sp = sign_pair(family_ex1());
  std::uniform_int_distribution<int> num(0, 1000);
  int discarded = 0;
  for (int t = 0; t < 300; ++t) {
    Rational a0 = make_rational(-40 + (int)(rng() % 110), 100);
    Rational b0 = make_rational((int)(rng() % 700), 100);
    Rational wa = make_rational(1 + (int)(rng() % 20), 100);
    Box2 box{{a0, a0 + wa}, {b0, b0 + wa}};
    const BiPoly& w = (t % 2 == 0) ? sp.w1 : sp.w2;
    if (w.box_range(box).strictly_positive()) {
      ++discarded;
      for (int s = 0; s < 100; ++s) {
        Rational ta = make_rational(num(rng), 1000), tb = make_rational(num(rng), 1000);
        Rational av = box.alpha.lo + ta * box.alpha.width();
        Rational bv = box.beta.lo + tb * box.beta.width();
        CHECK(sign(w.eval(av, bv)) > 0);
      }
    }
  }
  CHECK(discarded > 50);
}

TEST_CASE("grid sampling classifies the resonance picture") {
  IntervalFamily fam = family_ex1();
  RegionGrid grid = grid_sample(fam, 60, 4);
  int fr = 0, fs2 = 0, fs3 = 0, undecided = 0;
  for (int c : grid.classes) {
    if (c == 1) ++fr;
    if (c == 2) ++fs2;
    if (c == 3) ++fs3;
    if (c == -1) ++undecided;
  }
  CHECK(fr > 10);
  CHECK(fs2 > 10);
  CHECK(fs3 > 0);
  CHECK(undecided == 0);

  // consistency with the certified disk: every exact fR center is covered
  PolygonDisk disk = ex1_disk();
  SignPair sp = sign_pair(fam);
  const RationalInterval ar = fam.alpha_range();
  Rational bound = fam.beta_bound();
  for (int ib = 0; ib < grid.resolution_beta; ++ib) {
    for (int ia = 0; ia < grid.resolution_alpha; ++ia) {
      if (grid.at(ia, ib) != 1) continue;
      Rational a = ar.lo + ar.width() * Rational(2 * ia + 1) / (2 * grid.resolution_alpha);
      Rational b = bound * Rational(2 * ib + 1) / (2 * grid.resolution_beta);
      REQUIRE(in_fR(sp, a, b));
      CHECK(disk.locate({a, b}) != PointLocation::outside);
    }
  }

  CHECK_THROWS(grid_sample(fam, 1));
  std::string csv = grid_to_csv(grid);
  CHECK(csv.substr(0, 17) == "alpha,beta,class\n");
  CHECK(csv.find("fR") != std::string::npos);
  CHECK(csv.find("fS2") != std::string::npos);
  std::string svg = grid_to_svg(grid, {disk}, fam);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("polygon") != std::string::npos);
}
