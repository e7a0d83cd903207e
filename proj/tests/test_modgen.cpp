#include <algorithm>

#include <gtest/gtest.h>

#include "fgf/modgen.hpp"

using namespace fgf;

TEST(Modgen, FrobeniusOnlyCountsMatchClosureOracle) {
  // brute-force subgroup closure of E(F_q) and the Frobenius orbit of P
  const Curve e = parse_curve_spec(make_prime_field(5), "0,0,0,1,0");
  const GenerationReport g3 = generation_fraction(e, 3);
  EXPECT_EQ(g3.generating_frobenius, 144u);
  EXPECT_EQ(g3.total, 148u);
  EXPECT_EQ(g3.n, 37);
  const GenerationReport g2 = generation_fraction(e, 2);
  EXPECT_EQ(g2.generating_frobenius, 0u);
  EXPECT_EQ(g2.total, 32u);
  EXPECT_EQ(g2.n, 8);
  const GenerationReport f2 = generation_fraction(parse_curve_spec(make_prime_field(2), "1,0,1,0,1"), 4);
  EXPECT_EQ(f2.generating_frobenius, 8u);
  EXPECT_EQ(f2.total, 16u);
}

TEST(Modgen, EnlargedRingForSpecialJ) {
  const Curve j1728 = parse_curve_spec(make_prime_field(5), "0,0,0,1,0");
  const GenerationReport a = generation_fraction(j1728, 2);
  EXPECT_EQ(a.ring, "Z[F,i]");
  EXPECT_EQ(a.generating, 16u);
  EXPECT_EQ(a.bound, 0);
  EXPECT_TRUE(a.pass);

  const Curve j0 = parse_curve_spec(make_prime_field(7), "0,0,0,0,5");
  const GenerationReport b = generation_fraction(j0, 2);
  EXPECT_EQ(b.ring, "Z[F,zeta3]");
  EXPECT_EQ(b.generating_frobenius, 0u);
  EXPECT_EQ(b.generating, 42u);
  EXPECT_EQ(b.total, 63u);
  EXPECT_EQ(b.bound, mpq_class(1, 3));
  EXPECT_TRUE(b.pass);

  const GenerationReport plain = generation_fraction(parse_curve_spec(make_prime_field(3), "0,1,0,0,2"), 2);
  EXPECT_EQ(plain.ring, "Z[F]");
  EXPECT_EQ(plain.generating, plain.generating_frobenius);
}

TEST(Modgen, LatticeAgreesWithClosure) {
  struct Case {
    std::uint32_t q;
    const char* spec;
    unsigned ell;
  };
  for (const Case& c : {Case{5, "0,0,0,1,0", 2}, Case{5, "0,0,0,1,0", 3}, Case{2, "1,0,1,0,1", 4},
                        Case{2, "1,0,1,0,1", 6}, Case{3, "0,1,0,0,2", 3}, Case{7, "0,0,0,0,5", 2},
                        Case{5, "0,0,0,3,2", 2}}) {
    const Curve e = parse_curve_spec(make_field_of_order(c.q), c.spec);
    const GenerationReport a = generation_fraction(e, c.ell, GenerationMethod::Lattice);
    const GenerationReport b = generation_fraction(e, c.ell, GenerationMethod::Closure);
    EXPECT_EQ(a.generating, b.generating) << c.spec << " ell=" << c.ell;
    EXPECT_EQ(a.generating_frobenius, b.generating_frobenius) << c.spec << " ell=" << c.ell;
    EXPECT_EQ(a.total, b.total);
  }
}

TEST(Modgen, GroupStructure) {
  const GenerationReport g = generation_fraction(parse_curve_spec(make_prime_field(5), "0,0,0,1,0"), 2);
  EXPECT_EQ(g.n1 * g.n2, 32u);
  EXPECT_EQ(g.n1 % g.n2, 0u);
}

TEST(Modgen, SubmoduleContainsBaseAndIsClosed) {
  const Curve e = parse_curve_spec(make_prime_field(3), "0,1,0,0,2");
  const FieldPtr ext = make_extension(e.field(), 2);
  const Curve big = e.base_change(ext);
  const auto all = big.points();
  const auto base = e.points();
  for (std::size_t i = 0; i < all.size(); i += 4) {
    const auto sub = frobenius_submodule(e, ext, all[i]);
    EXPECT_TRUE(std::is_sorted(sub.begin(), sub.end()));
    EXPECT_EQ(all.size() % sub.size(), 0u);
    for (const Point& b : base) EXPECT_TRUE(std::binary_search(sub.begin(), sub.end(), b));
    EXPECT_TRUE(std::binary_search(sub.begin(), sub.end(), all[i]));
    for (const Point& x : sub)
      for (const Point& y : sub) EXPECT_TRUE(std::binary_search(sub.begin(), sub.end(), big.add_unchecked(x, y)));
  }
}

TEST(Modgen, BoundHoldsOnSmallFixtures) {
  for (auto [q, spec] : std::vector<std::pair<std::uint32_t, std::string>>{
           {2, "1,0,1,0,1"}, {3, "0,1,0,0,2"}, {5, "0,0,0,3,2"}, {5, "0,0,0,1,0"}, {7, "0,0,0,0,5"}}) {
    const Curve e = parse_curve_spec(make_field_of_order(q), spec);
    std::uint64_t qe = 1;
    for (unsigned ell = 1; (qe *= q) <= 5000; ++ell) {
      const GenerationReport g = generation_fraction(e, ell);
      EXPECT_TRUE(g.pass) << spec << " ell=" << ell;
      EXPECT_FALSE(g.end_ring_caveat);
      mpq_class expect(g.generating, g.total);
      expect.canonicalize();
      EXPECT_EQ(g.fraction, expect);
      EXPECT_EQ(g.bound, 1 - 2 * g.psi);
    }
  }
}
