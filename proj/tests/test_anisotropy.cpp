#include <gtest/gtest.h>

#include "fgf/anisotropy.hpp"

using namespace fgf;

namespace {

bool all_checked(const AnisotropyCertificate& c) {
  for (const auto& s : c.trace)
    if (!s.checked) return false;
  return true;
}

}  // namespace

TEST(Anisotropy, LiftedFormLayout) {
  const FieldPtr f5 = make_prime_field(5);
  const LaurentForm q = lift_form(make_form(f5, 2, {1, 3}), 1);
  EXPECT_EQ(q.to_string(),
            "(form :d 2 :coeffs ((series :v 0 :coeffs (1)) (series :v 0 :coeffs (3)) "
            "(series :v 1 :coeffs (1)) (series :v 1 :coeffs (3))))");
  EXPECT_EQ(lift_form(make_form(f5, 2, {1, 3}), 2).size(), 8u);
  EXPECT_EQ(lift_form(make_form(make_prime_field(7), 3, {1, 5}), 2).size(), 18u);
}

TEST(Anisotropy, ResidueAnisotropicFixtures) {
  struct Fixture {
    std::uint32_t p;
    unsigned d;
    std::vector<Code> coeffs;
  };
  AnisotropyOptions o;
  o.trials = 2000;
  for (const Fixture& fx : {Fixture{5, 2, {1, 3}}, Fixture{7, 3, {1, 5}}, Fixture{3, 2, {1, 1}}, Fixture{2, 3, {1}}}) {
    const AnisotropyCertificate c = dvr_anisotropy_check(make_form(make_prime_field(fx.p), fx.d, fx.coeffs), o);
    EXPECT_EQ(c.conclusion, Conclusion::Anisotropic) << fx.p;
    EXPECT_TRUE(all_checked(c));
    EXPECT_EQ(c.falsification.trials, 2000u);
    EXPECT_EQ(c.falsification.witnesses, 0u);
    EXPECT_EQ(c.falsification.class_violations, 0u);
    EXPECT_GT(c.falsification.class_checks, 0u);
    ASSERT_GE(c.trace.size(), 5u);
    EXPECT_EQ(c.trace.front().kind, "residue-exhaustive");
    EXPECT_EQ(c.trace.back().kind, "falsification");
  }
}

TEST(Anisotropy, IsotropicControlLiftsWitness) {
  const AnisotropyCertificate c = dvr_anisotropy_check(make_form(make_prime_field(5), 2, {1, 1}));
  EXPECT_EQ(c.conclusion, Conclusion::Isotropic);
  EXPECT_TRUE(c.witness_checked);
  ASSERT_EQ(c.witness.size(), 4u);
  EXPECT_EQ(c.witness[0], "(series :v 0 :coeffs (1))");
  EXPECT_EQ(c.witness[1], "(series :v 0 :coeffs (2))");
}

TEST(Anisotropy, TwoLocalParameters) {
  AnisotropyOptions o;
  o.trials = 300;
  o.precision = 4;
  const AnisotropyCertificate c = local_params_anisotropy(make_form(make_prime_field(5), 2, {1, 3}), 2, o);
  EXPECT_EQ(c.conclusion, Conclusion::Anisotropic);
  EXPECT_TRUE(all_checked(c));
  EXPECT_EQ(c.levels, 2u);
  EXPECT_EQ(c.falsification.witnesses, 0u);
}

TEST(Anisotropy, ZeroLevelsIsTheResidueCheck) {
  const AnisotropyCertificate c = local_params_anisotropy(make_form(make_prime_field(5), 2, {1, 3}), 0);
  EXPECT_EQ(c.conclusion, Conclusion::Anisotropic);
  EXPECT_EQ(c.falsification.trials, 0u);
  const AnisotropyCertificate i = local_params_anisotropy(make_form(make_prime_field(5), 2, {1, 1}), 0);
  EXPECT_EQ(i.conclusion, Conclusion::Isotropic);
  EXPECT_EQ(i.witness, (std::vector<std::string>{"1", "2"}));
}

TEST(Anisotropy, SeedDeterminesFalsification) {
  AnisotropyOptions o;
  o.trials = 500;
  const FFForm q = make_form(make_prime_field(7), 3, {1, 5});
  const AnisotropyCertificate a = dvr_anisotropy_check(q, o), b = dvr_anisotropy_check(q, o);
  EXPECT_EQ(a.falsification.class_checks, b.falsification.class_checks);
  o.seed = 99;
  const AnisotropyCertificate c = dvr_anisotropy_check(q, o);
  EXPECT_EQ(c.falsification.seed, 99u);
  EXPECT_EQ(c.conclusion, Conclusion::Anisotropic);
}
