#include <cmath>
#include <functional>

#include <gtest/gtest.h>

#include "fgf/forms.hpp"

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

TEST(Forms, FirstLexicographicZero) {
  const FieldPtr f5 = make_prime_field(5);
  const ZeroSearchResult r = find_zero(make_form(f5, 2, {1, 1}));
  ASSERT_EQ(r.status, ZeroStatus::Found);
  EXPECT_EQ(r.witness, (std::vector<Code>{1, 2}));
  EXPECT_EQ(find_zero(make_form(make_prime_field(3), 2, {1, 1})).status, ZeroStatus::ProvenNone);
  EXPECT_EQ(find_zero(make_form(f5, 2, {1, 3})).status, ZeroStatus::ProvenNone);
}

TEST(Forms, TensorAndPfisterOrdering) {
  const FiniteFieldDomain dom{make_prime_field(7)};
  EXPECT_EQ(pfister(dom, 2, {2, 3}).to_string(), "(form :d 2 :coeffs (1 3 2 6))");
  EXPECT_EQ(pfister(dom, 3, {2}).to_string(), "(form :d 3 :coeffs (1 2 4))");
  const FFForm t = tensor(make_form(dom.field, 2, {1, 2}), make_form(dom.field, 2, {3, 4}));
  EXPECT_EQ(t.coefficients(), (std::vector<Code>{3, 4, 6, 1}));
  expect_code(ErrorCode::DegreeMismatch, [&] { tensor(make_form(dom.field, 2, {1}), make_form(dom.field, 3, {1})); });
  expect_code(ErrorCode::ZeroCoefficient, [&] { pfister(dom, 2, {0}); });
}

TEST(Forms, Validation) {
  const FieldPtr f = make_prime_field(5);
  expect_code(ErrorCode::ZeroCoefficient, [&] { make_form(f, 2, {1, 0}); });
  expect_code(ErrorCode::InvalidArgument, [&] { make_form(f, 1, {1}); });
  expect_code(ErrorCode::InvalidArgument, [&] { make_form(f, 2, {7}); });
  const FFForm q = make_form(f, 2, {1, 2});
  expect_code(ErrorCode::LengthMismatch, [&] { q.eval(std::vector<Code>{1}); });
  EXPECT_EQ(q.eval(std::vector<Code>{1, 1}), 3u);
  EXPECT_EQ(parse_form(f, "(form :d 2 :coeffs (1 -2))").coefficients(), (std::vector<Code>{1, 3}));
  expect_code(ErrorCode::ParseError, [&] { parse_form(f, "(form :d 2)"); });
  expect_code(ErrorCode::FieldMismatch, [&] { base_change(q, make_field_of_order(49)); });
}

TEST(Forms, RandomModeIsSeeded) {
  const FFForm q = make_form(make_prime_field(11), 2, {1, 1, 1});
  ZeroSearchOptions o;
  o.exhaustive = false;
  const ZeroSearchResult a = find_zero(q, o), b = find_zero(q, o);
  ASSERT_TRUE(a.found());
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(q.eval(a.witness), 0u);
  ZeroSearchOptions none = o;
  none.trials = 50;
  EXPECT_EQ(find_zero(make_form(make_prime_field(3), 2, {1, 1}), none).status, ZeroStatus::TrialsExhausted);
}

TEST(Forms, ExhaustiveBudget) {
  ZeroSearchOptions o;
  o.budget = 1000;
  expect_code(ErrorCode::BudgetExceeded, [&] { find_zero(make_form(make_prime_field(11), 2, {1, 1, 1}), o); });
}

TEST(Forms, SpringerDescent) {
  struct Case {
    unsigned d;
    std::uint32_t base;
    unsigned degree;
    std::size_t forms;
  };
  for (const Case& c : {Case{2, 3, 3, 4}, Case{2, 5, 3, 16}, Case{3, 2, 2, 1}, Case{3, 4, 2, 9}}) {
    const SpringerReport r = springer_experiment(c.d, make_field_of_order(c.base), c.degree);
    EXPECT_EQ(r.cases.size(), c.forms);
    EXPECT_EQ(r.counterexamples, 0u);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.extension_order, static_cast<std::uint64_t>(std::pow(c.base, c.degree)));
  }
  expect_code(ErrorCode::InvalidArgument, [] { springer_experiment(2, make_prime_field(3), 2); });
}

TEST(Forms, EvenDegreeBreaksQuadraticDescent) {
  // <1, 1> over F_3 is anisotropic, over F_9 it has a zero
  const FFForm q = make_form(make_prime_field(3), 2, {1, 1});
  EXPECT_FALSE(find_zero(q).found());
  EXPECT_TRUE(find_zero(base_change(q, make_extension(make_prime_field(3), 2))).found());
}

TEST(Forms, ChevalleyWarningSmallFields) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const CwReport r = cw_check(make_field_of_order(q));
    EXPECT_EQ(r.d, q % 2 == 0 ? 3u : 2u);
    EXPECT_EQ(r.tuples, std::uint64_t(q - 1) * (q - 1) * (q - 1));
    EXPECT_TRUE(r.pass) << q;
  }
}

TEST(Forms, BinaryFormZeroIffRatioIsPower) {
  // <1, c>_d has a zero exactly when -c is a d-th power
  for (std::uint32_t q : {5u, 7u, 9u, 13u}) {
    const FieldPtr f = make_field_of_order(q);
    for (unsigned d : {2u, 3u})
      for (Code c = 1; c < q; ++c)
        EXPECT_EQ(find_zero(make_form(f, d, {1, c})).found(), f->is_dth_power(f->neg(c), d)) << q << " " << c;
  }
}
