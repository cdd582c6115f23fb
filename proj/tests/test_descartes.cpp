#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "example_families.hpp"
#include "hopfcert/descartes.hpp"
#include "test_util.hpp"

using namespace hopfcert;
using namespace hopfcert::testutil;

namespace {
QPoly qp(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return QPoly(std::move(c));
}
}  // namespace

TEST_CASE("re/im parity split of fixed interval polynomials") {
  SUBCASE("point lambda^2 + 1") {
    FixedFamily f;
    f.coeffs = {RationalInterval::point(Rational(1)),
                RationalInterval::point(Rational(0))};
    auto [re, im] = re_im_parts(f);
    CHECK(re.coeff(0) == RationalInterval::point(Rational(1)));
    CHECK(re.coeff(2) == RationalInterval::point(Rational(-1)));
    for (int k = 0; k <= im.degree(); ++k)
      CHECK(im.coeff(k) == RationalInterval::point(Rational(0)));
  }
  SUBCASE("[1,2] + [3,4] lambda") {
    FixedFamily f;
    f.coeffs = {RationalInterval(Rational(1), Rational(2))};
    // monic degree 1: leading coefficient 1 sits in the Im part
    auto [re, im] = re_im_parts(f);
    CHECK(re.coeff(0) == RationalInterval(Rational(1), Rational(2)));
    CHECK(im.coeff(1) == RationalInterval::point(Rational(1)));
  }
  SUBCASE("negation swaps endpoints at degrees 2 mod 4") {
    FixedFamily f;
    f.coeffs = {RationalInterval::point(Rational(0)),
                RationalInterval::point(Rational(0)),
                RationalInterval(Rational(2), Rational(5))};
    auto [re, im] = re_im_parts(f);
    CHECK(re.coeff(2) == RationalInterval(Rational(-5), Rational(-2)));
  }
  SUBCASE("symbolic split of the fifth-degree family") {
    auto [re, im] = re_im_parts(family_ex3());
    // Re = J0 - J2 w^2 + J4 w^4; Im = J1 w - J3 w^3 + w^5
    CHECK(re.coeffs[0].lo == QPoly::constant(Rational(35)));
    CHECK(re.coeffs[2].hi == -apoly({Rational(46), Rational(36)}));
    CHECK(re.coeffs[2].lo == -apoly({Rational(48), Rational(36)}));
    CHECK(re.coeffs[4].lo == apoly({Rational(10), Rational(1)}));
    CHECK(im.coeffs[1].lo == apoly({Rational(35), Rational(36)}));
    CHECK(im.coeffs[3].hi == -apoly({Rational(36), Rational(11)}));
    CHECK(im.coeffs[5].lo == QPoly::constant(Rational(1)));
  }
}

TEST_CASE("combined polynomial reproduces the displayed formula exactly") {
  IntervalFamily fam = family_ex3();
  QPoly q = qp({0, 1});   // Q(w) = w
  QPoly r = qp({-5});     // R(w) = -5
  SymIntervalPoly t = combine_T(fam, q, r);
  REQUIRE(t.degree() == 5);
  // (-144 - 180 a +- 6) w + (138 + 19 a +- 6) w^3 + (6 + a +- 1) w^5
  CHECK(t.coeffs[1].lo == apoly({Rational(-150), Rational(-180)}));
  CHECK(t.coeffs[1].hi == apoly({Rational(-138), Rational(-180)}));
  CHECK(t.coeffs[3].lo == apoly({Rational(132), Rational(19)}));
  CHECK(t.coeffs[3].hi == apoly({Rational(144), Rational(19)}));
  CHECK(t.coeffs[5].lo == apoly({Rational(5), Rational(1)}));
  CHECK(t.coeffs[5].hi == apoly({Rational(7), Rational(1)}));
  for (int k : {0, 2, 4}) {
    CHECK(t.coeffs[static_cast<size_t>(k)].lo.is_zero());
    CHECK(t.coeffs[static_cast<size_t>(k)].hi.is_zero());
  }
  // fixed instantiation at alpha = 0
  IntervalPoly t0 = combine_T(fam.instantiate(Rational(0)), q, r);
  CHECK(t0.coeff(1) == RationalInterval(Rational(-150), Rational(-138)));
  CHECK(t0.coeff(3) == RationalInterval(Rational(132), Rational(144)));
  CHECK(t0.coeff(5) == RationalInterval(Rational(5), Rational(7)));
}

TEST_CASE("interval sign-change counting") {
  SUBCASE("third example pattern at alpha = 0") {
    IntervalPoly p;
    p.coeffs = {RationalInterval::point(Rational(0)),
                RationalInterval(Rational(-150), Rational(-138)),
                RationalInterval::point(Rational(0)),
                RationalInterval(Rational(132), Rational(144)),
                RationalInterval::point(Rational(0)),
                RationalInterval(Rational(5), Rational(7))};
    SignChangeVerdict v = count_sign_changes(p);
    CHECK(v.at_most_one);
    CHECK(v.pivot >= 1);
    CHECK(v.pivot <= 3);
  }
  SUBCASE("middle interval straddling zero acts as the pivot") {
    IntervalPoly p;
    p.coeffs = {RationalInterval(Rational(1), Rational(2)),
                RationalInterval(Rational(-1), Rational(1)),
                RationalInterval(Rational(-3), Rational(-2))};
    SignChangeVerdict v = count_sign_changes(p);
    CHECK(v.at_most_one);
    CHECK(v.pivot == 1);
  }
  SUBCASE("plus minus plus needs two changes") {
    IntervalPoly p;
    p.coeffs = {RationalInterval(Rational(1), Rational(2)),
                RationalInterval(Rational(-3), Rational(-2)),
                RationalInterval(Rational(1), Rational(2))};
    SignChangeVerdict v = count_sign_changes(p);
    CHECK(!v.at_most_one);
    CHECK(v.violating.first >= 0);
    CHECK(v.violating.second > v.violating.first);
  }
  SUBCASE("positive scaling never changes the verdict") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> e(-6, 6);
    for (int t = 0; t < 200; ++t) {
      IntervalPoly p;
      for (int k = 0; k < 6; ++k) {
        int a = e(rng), b = e(rng);
        if (a > b) std::swap(a, b);
        p.coeffs.emplace_back(Rational(a), Rational(b));
      }
      Rational c = make_rational(1 + (int)(rng() % 30), 7);
      IntervalPoly scaled;
      for (const auto& iv : p.coeffs) scaled.coeffs.push_back(scale(iv, c));
      CHECK(count_sign_changes(p).at_most_one == count_sign_changes(scaled).at_most_one);
    }
  }
}

TEST_CASE("R5''' certification") {
  QPoly q = qp({0, 1});
  QPoly r = qp({-5});
  SUBCASE("third example certifies with Q = w, R = -5") {
    R5DescartesResult res = check_R5ppp(family_ex3(), q, r);
    CHECK(res.verdict == CertVerdict::certified);
    CHECK(res.pattern.at_most_one);
  }
  SUBCASE("real part alone has a plus-minus-plus pattern") {
    R5DescartesResult res = check_R5ppp(family_ex3(), qp({1}), QPoly());
    CHECK(res.verdict == CertVerdict::inconclusive);
    CHECK(!res.pattern.at_most_one);
  }
  SUBCASE("point family lambda^2 + 1 with Q = 1, R = 0") {
    QPoly one = QPoly::constant(Rational(1));
    IntervalFamily fam({{one, one}, {QPoly(), QPoly()}}, {Rational(0), Rational(1)});
    R5DescartesResult res = check_R5ppp(fam, qp({1}), QPoly());
    CHECK(res.verdict == CertVerdict::certified);
  }
  SUBCASE("sign-varying coefficient at the pivot still certifies") {
    // T = a - w^2: one sign change at every alpha regardless of sign(a)
    QPoly a = apoly({Rational(0), Rational(1)});
    IntervalFamily fam({{a, a}, {QPoly(), QPoly()}}, {Rational(-1), Rational(1)});
    R5DescartesResult res = check_R5ppp(fam, qp({1}), QPoly());
    CHECK(res.verdict == CertVerdict::certified);
  }
  SUBCASE("alpha-dependent coefficient sign away from the pivot is reported") {
    // J0 = {a}, J1 = {1}, Q = 1, R = w^3: T = a - w^2 + w^4
    QPoly a = apoly({Rational(0), Rational(1)});
    QPoly one = QPoly::constant(Rational(1));
    IntervalFamily fam({{a, a}, {one, one}}, {Rational(-1), Rational(1)});
    R5DescartesResult res = check_R5ppp(fam, qp({1}), qp({0, 0, 0, 1}));
    CHECK(res.verdict == CertVerdict::inconclusive);
    CHECK(res.offending_degree == 0);
    REQUIRE(res.offending_alpha.has_value());
    CHECK(res.offending_alpha->contains(Rational(0)));
  }
}

TEST_CASE("certified families have at most one imaginary pair per member") {
  std::mt19937_64 rng(314159);
  IntervalFamily fam = family_ex3();
  R5DescartesResult res = check_R5ppp(fam, qp({0, 1}), qp({-5}));
  REQUIRE(res.verdict == CertVerdict::certified);
  std::uniform_int_distribution<int> pick(0, 100);
  for (int t = 0; t < 60; ++t) {
    Rational alpha = fam.alpha_range().lo +
                     make_rational(pick(rng), 100) * fam.alpha_range().width();
    FixedFamily fixed = fam.instantiate(alpha);
    for (int m = 0; m < 25; ++m) {
      RootCount rc = root_count(random_member(fixed, rng));
      CHECK(rc.n_imag <= 2);
    }
  }
}

TEST_CASE("fixed-polynomial Descartes verdicts") {
  SUBCASE("(l^2+1)(l+2) with Q=1, R=0") {
    QPoly p = qp({2, 1, 2, 1});
    FixedDescartesResult res = check_fixed_descartes(p, qp({1}), QPoly());
    CHECK(res.combined == qp({2, 0, -2}));
    CHECK(res.at_most_one_pair);
  }
  SUBCASE("(l^2+1)(l^2+4) has two changes") {
    FixedDescartesResult res = check_fixed_descartes(qp({4, 0, 5, 0, 1}), qp({1}), QPoly());
    CHECK(res.sign_changes == 2);
    CHECK(!res.at_most_one_pair);
  }
  SUBCASE("l + 1 through the imaginary part") {
    FixedDescartesResult res = check_fixed_descartes(qp({1, 1}), QPoly(), qp({1}));
    CHECK(res.combined == qp({0, 1}));
    CHECK(res.sign_changes == 0);
    CHECK(res.at_most_one_pair);
  }
}

TEST_CASE("enclosure soundness of the combined polynomial") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> e(-4, 4);
  std::uniform_int_distribution<int> deg(0, 3);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + (int)(rng() % 4);
    FixedFamily fam;
    for (int k = 0; k < n; ++k) {
      int a = e(rng), b = e(rng);
      if (a > b) std::swap(a, b);
      fam.coeffs.emplace_back(Rational(a), Rational(b));
    }
    QPoly q = random_int_poly(rng, deg(rng) + 1, 3);
    QPoly r = random_int_poly(rng, deg(rng) + 1, 3);
    IntervalPoly t = combine_T(fam, q, r);
    QPoly member = random_member(fam, rng);
    QPoly s = q * re_of_i_omega(member) + r * im_of_i_omega(member);
    for (int k = 0; k <= std::max(t.degree(), s.degree()); ++k)
      CHECK(t.coeff(k).contains(s.coeff(k)));
    // pointwise too, at random rational omega
    for (int j = 0; j < 5; ++j) {
      Rational w = make_rational(e(rng), 3);
      RationalInterval acc = RationalInterval::point(Rational(0));
      for (int k = t.degree(); k >= 0; --k)
        acc = scale(acc, w) + t.coeff(k);
      CHECK(acc.contains(s.eval(w)));
    }
  }
}
