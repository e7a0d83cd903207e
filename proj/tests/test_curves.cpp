#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "fgf/curves.hpp"

using namespace fgf;

namespace {

void expect_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Curves, DiscriminantFixtures) {
  const FieldPtr f5 = make_prime_field(5);
  // y^2 = x^3 + x: -16 (4 + 0) = -64 = 1 mod 5
  EXPECT_EQ(weierstrass_discriminant(*f5, {0, 0, 0, 1, 0}), 1u);
  EXPECT_NE(weierstrass_discriminant(*make_prime_field(2), {1, 0, 0, 0, 1}), 0u);
  EXPECT_EQ(weierstrass_discriminant(*f5, {0, 0, 0, 0, 0}), 0u);
  expect_code(ErrorCode::SingularCurve, [&] { Curve(f5, {0, 0, 0, 0, 0}); });
  // y^2 = x^3 - 3x + 2 = (x - 1)^2 (x + 2)
  expect_code(ErrorCode::SingularCurve, [] { Curve::short_form(make_prime_field(7), 4, 2); });
}

TEST(Curves, PointListOrderAndCount) {
  const Curve e = parse_curve_spec(make_prime_field(5), "0,0,0,1,0");
  const auto pts = e.points();
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_TRUE(pts[0].infinity);
  EXPECT_EQ(pts[1], Point::affine(0, 0));
  EXPECT_EQ(pts[2], Point::affine(2, 0));
  EXPECT_EQ(pts[3], Point::affine(3, 0));
}

TEST(Curves, TraceFixtures) {
  // brute-force counts from the enumeration oracle
  struct Row {
    std::uint32_t q;
    const char* spec;
    std::uint64_t n1;
    std::int64_t t;
  };
  for (const Row& r : {Row{5, "0,0,0,1,0", 4, 2}, Row{2, "1,0,1,0,1", 2, 1}, Row{3, "0,1,0,0,2", 3, 1},
                       Row{5, "0,0,0,3,2", 5, 1}, Row{7, "0,0,0,0,5", 7, 1}}) {
    const FrobeniusData fd = frobenius_trace(parse_curve_spec(make_field_of_order(r.q), r.spec));
    EXPECT_EQ(fd.n1, r.n1) << r.spec;
    EXPECT_EQ(fd.t, r.t) << r.spec;
    EXPECT_TRUE(fd.ordinary);
  }
}

TEST(Curves, ExtensionCountsMatchOracle) {
  struct Row {
    std::uint32_t q;
    const char* spec;
    std::vector<long> counts;
  };
  for (const Row& r : {Row{5, "0,0,0,1,0", {4, 32, 148}}, Row{2, "1,0,1,0,1", {2, 8, 14}},
                       Row{3, "0,1,0,0,2", {3, 15, 36}}, Row{5, "0,0,0,3,2", {5, 35, 140}},
                       Row{7, "0,0,0,0,5", {7, 63, 364}}}) {
    const Curve e = parse_curve_spec(make_field_of_order(r.q), r.spec);
    const FrobeniusData fd = frobenius_trace(e);
    for (unsigned ell = 1; ell <= 3; ++ell) {
      EXPECT_EQ(count_over_extension(fd, ell), r.counts[ell - 1]) << r.spec << " ell=" << ell;
      EXPECT_EQ(e.base_change(make_extension(e.field(), ell)).count_points(),
                static_cast<std::uint64_t>(r.counts[ell - 1]));
    }
  }
}

TEST(Curves, FirstOrdinaryCurves) {
  // the oracle's lexicographic scan, preferring trace 1
  EXPECT_EQ(find_ordinary_curve(make_prime_field(2)).spec(), "1,0,1,0,1");
  EXPECT_EQ(find_ordinary_curve(make_prime_field(3)).spec(), "0,1,0,0,2");
  EXPECT_EQ(find_ordinary_curve(make_prime_field(5)).spec(), "0,0,0,3,2");
  EXPECT_EQ(find_ordinary_curve(make_prime_field(7)).spec(), "0,0,0,0,5");
  const Curve e9 = find_ordinary_curve(make_field_of_order(9));
  EXPECT_EQ(e9.coefficients(), (std::array<Code, 5>{0, 1, 0, 0, 3}));
  EXPECT_EQ(frobenius_trace(e9).t, 1);
}

TEST(Curves, SupersingularIsNotOrdinary) {
  // y^2 = x^3 + 1 over F_5 has 6 points
  const FrobeniusData fd = frobenius_trace(Curve::short_form(make_prime_field(5), 0, 1));
  EXPECT_EQ(fd.n1, 6u);
  EXPECT_FALSE(fd.ordinary);
}

TEST(Curves, GroupLawProperties) {
  std::mt19937_64 rng(3);
  for (auto [q, spec] : std::vector<std::pair<std::uint32_t, std::string>>{
           {2, "1,0,1,0,1"}, {4, "1,0,0,0,1"}, {9, "0,1,0,0,(elt 0 1)"}, {8, "1,1,0,0,1"}, {13, "0,0,0,2,3"}}) {
    const Curve e = parse_curve_spec(make_field_of_order(q), spec);
    const auto pts = e.points();
    const std::int64_t n = static_cast<std::int64_t>(pts.size());
    for (int i = 0; i < 200; ++i) {
      const Point& a = pts[rng() % pts.size()];
      const Point& b = pts[rng() % pts.size()];
      const Point& c = pts[rng() % pts.size()];
      EXPECT_EQ(e.add(e.add(a, b), c), e.add(a, e.add(b, c)));
      EXPECT_EQ(e.add(a, b), e.add(b, a));
      EXPECT_TRUE(e.add(a, e.neg(a)).infinity);
      EXPECT_TRUE(e.mul(n, a).infinity);
      EXPECT_TRUE(e.contains(e.add(a, b)));
    }
  }
}

TEST(Curves, StrayPointRejected) {
  const Curve e = parse_curve_spec(make_prime_field(5), "0,0,0,1,0");
  expect_code(ErrorCode::CurveMismatch, [&] { e.add(Point::affine(1, 1), Point::at_infinity()); });
}

TEST(Curves, TwistIsTheModelOfFuY2) {
  const FieldPtr f = make_prime_field(11);
  const Curve e = Curve::short_form(f, 1, 3);
  const std::uint64_t n = e.count_points();
  for (Code u = 0; u < 11; ++u) {
    const Code fu = f->add(f->add(f->pow(u, 3), u), 3);
    if (fu == 0) {
      expect_code(ErrorCode::TwistDegenerate, [&] { quadratic_twist(e, u); });
      continue;
    }
    const Curve tw = quadratic_twist(e, u);
    // f(u) y^2 = f(x) maps to (f(u) x, f(u)^2 y)
    for (Code x = 0; x < 11; ++x)
      for (Code y = 0; y < 11; ++y) {
        const Code fx = f->add(f->add(f->pow(x, 3), x), 3);
        if (f->mul(fu, f->mul(y, y)) != fx) continue;
        EXPECT_TRUE(tw.contains(Point::affine(f->mul(fu, x), f->mul(f->mul(fu, fu), y))));
      }
    const std::uint64_t nt = tw.count_points();
    if (f->is_dth_power(fu, 2)) EXPECT_EQ(nt, n);
    else EXPECT_EQ(nt, 2 * 11 + 2 - n);
  }
  expect_code(ErrorCode::CharTwo, [] { quadratic_twist(parse_curve_spec(make_prime_field(2), "1,0,1,0,1"), 1); });
}

TEST(Curves, ZCoordinate) {
  const Curve e = Curve::short_form(make_prime_field(7), 0, 5);
  const FieldPtr& f = e.field();
  for (const Point& p : e.points()) {
    if (p.infinity || p.x == 0) {
      expect_code(ErrorCode::PoleOfZ, [&] { z_coord(e, p); });
    } else {
      EXPECT_EQ(f->mul(z_coord(e, p), p.x), p.y);
    }
  }
}

TEST(Curves, FrobeniusEndomorphismCommutesWithAddition) {
  const Curve e = parse_curve_spec(make_prime_field(3), "0,1,0,0,2");
  const FieldPtr f27 = make_extension(e.field(), 3);
  const Curve big = e.base_change(f27);
  const auto pts = big.points();
  for (std::size_t i = 0; i < pts.size(); i += 3)
    for (std::size_t j = 0; j < pts.size(); j += 5) {
      const Point s = big.add(pts[i], pts[j]);
      EXPECT_EQ(frobenius_endo(big, s, *e.field()),
                big.add(frobenius_endo(big, pts[i], *e.field()), frobenius_endo(big, pts[j], *e.field())));
    }
}
