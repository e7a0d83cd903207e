#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "fgf/laurent.hpp"

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

bool same(const LaurentSeries& a, const LaurentSeries& b) { return (a - b).is_exact_zero(); }

}  // namespace

TEST(Laurent, InverseOfTwoTermSeries) {
  const FieldPtr f = make_prime_field(5);
  const LaurentSeries s = parse_series(f, 1, "(series :v -1 :coeffs (1 0 2))");
  // t / (1 + 2t^2) = t - 2t^3 + 4t^5 - ...
  const LaurentSeries inv = s.inverse(4);
  EXPECT_EQ(inv.to_string(), "(series :v 1 :coeffs (1 0 3 0) :prec 5)");
  const LaurentSeries prod = s * inv;
  EXPECT_EQ(prod.valuation(), 0);
  EXPECT_EQ(prod.absolute_precision(), 4);
  EXPECT_EQ(prod.coefficient(0).constant_value(), 1u);
  for (int k = 1; k < 4; ++k) EXPECT_EQ(prod.coefficient(k).constant_value(), 0u);
}

TEST(Laurent, MonomialsInvertExactly) {
  const FieldPtr f = make_prime_field(7);
  const LaurentSeries t = LaurentSeries::variable(f, 1, 1);
  const LaurentSeries m = t.pow(3) * LaurentSeries::constant(f, 1, 3);
  const LaurentSeries inv = m.inverse();
  EXPECT_TRUE(inv.exact());
  EXPECT_EQ(inv.valuation(), -3);
  EXPECT_TRUE(same(m * inv, LaurentSeries::one(f, 1)));
}

TEST(Laurent, ExactRingAxiomsRandomized) {
  const FieldPtr f = make_prime_field(3);
  std::mt19937_64 rng(5);
  for (unsigned depth : {1u, 2u}) {
    for (int i = 0; i < 100; ++i) {
      const LaurentSeries a = random_series(f, depth, 3, -2, 2, rng);
      const LaurentSeries b = random_series(f, depth, 3, -2, 2, rng);
      const LaurentSeries c = random_series(f, depth, 3, -2, 2, rng);
      EXPECT_TRUE(same(a * (b + c), a * b + a * c));
      EXPECT_TRUE(same((a * b) * c, a * (b * c)));
      EXPECT_TRUE(same(a * b, b * a));
      EXPECT_TRUE((a - a).is_exact_zero());
      EXPECT_EQ((a * b).valuation(), a.valuation() + b.valuation());
    }
  }
}

TEST(Laurent, NestedValuations) {
  const FieldPtr f = make_prime_field(5);
  const LaurentSeries t1 = LaurentSeries::variable(f, 2, 1);
  const LaurentSeries t2 = LaurentSeries::variable(f, 2, 2);
  // t1 is a unit for v_t2; its leading coefficient has t1-valuation 1
  EXPECT_EQ(t1.valuation(), 0);
  EXPECT_EQ(t1.leading_coefficient().valuation(), 1);
  EXPECT_EQ((t1 * t2 * t2).valuation(), 2);
  EXPECT_EQ((t1.pow(4) + t2).valuation(), 0);
}

TEST(Laurent, PrecisionTracking) {
  const FieldPtr f = make_prime_field(5);
  const LaurentSeries a = parse_series(f, 1, "(series :v 0 :coeffs (1 2) :prec 2)");
  const LaurentSeries b = parse_series(f, 1, "(series :v 1 :coeffs (3) :prec 4)");
  EXPECT_EQ((a + b).absolute_precision(), 2);
  EXPECT_EQ((a * b).absolute_precision(), 3);
  const LaurentSeries z = a - a;
  EXPECT_TRUE(z.is_zero());
  EXPECT_FALSE(z.is_exact_zero());
  expect_code(ErrorCode::PrecisionExhausted, [&] { z.valuation(); });
  expect_code(ErrorCode::PrecisionExhausted, [&] { z.inverse(); });
  expect_code(ErrorCode::PrecisionExhausted, [&] { a.coefficient(5); });
}

TEST(Laurent, LiteralRoundTrip) {
  const FieldPtr f = make_prime_field(7);
  for (const char* text : {"(series :v -2 :coeffs (3 0 1))", "(series :v 1 :coeffs (1 6 0) :prec 4)",
                           "(series :v 0 :coeffs ())"}) {
    EXPECT_EQ(parse_series(f, 1, text).to_string(), text);
  }
  const std::string nested = "(series :v 1 :coeffs ((series :v -1 :coeffs (2))))";
  EXPECT_EQ(parse_series(f, 2, nested).to_string(), nested);
  expect_code(ErrorCode::ParseError, [&] { parse_series(f, 1, "(series :v x :coeffs (1))"); });
}

TEST(Laurent, MixedDomainsRejected) {
  const LaurentSeries a = LaurentSeries::one(make_prime_field(5), 1);
  const LaurentSeries b = LaurentSeries::one(make_prime_field(5), 2);
  const LaurentSeries c = LaurentSeries::one(make_prime_field(7), 1);
  expect_code(ErrorCode::FieldMismatch, [&] { (void)(a + b); });
  expect_code(ErrorCode::FieldMismatch, [&] { (void)(a * c); });
  expect_code(ErrorCode::InvalidArgument, [] { LaurentSeries::variable(make_prime_field(5), 1, 2); });
}
