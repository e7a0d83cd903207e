#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "fgf/logic.hpp"

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

TEST(Logic, SquareRootOfTwo) {
  const Formula f = parse_formula("(exists x (= (* x x) (+ 1 1)))");
  EXPECT_TRUE(eval(f, make_prime_field(7)));
  EXPECT_FALSE(eval(f, make_prime_field(5)));
  const Formula refl = parse_formula("(forall x (= x x))");
  for (std::uint32_t q : {2u, 4u, 9u, 27u}) EXPECT_TRUE(eval(refl, make_field_of_order(q)));
}

TEST(Logic, PrintParseRoundTrip) {
  for (const char* text : {"(forall x (= (* x x) x))", "(exists y (= (+ y 1) 0))",
                           "(implies (hole P x y) (not (or (= x 0) (= y 1))))"}) {
    EXPECT_EQ(print(parse_formula(text)), text);
  }
  EXPECT_EQ(print(parse_term("(- (* a b) 1)")), "(- (* a b) 1)");
}

TEST(Logic, ParseErrors) {
  for (const char* bad : {"(= x)", "(exists 1 (= x x))", "(foo x)", "(and (= x x))", "(= x y) extra",
                          "(not (= x x) (= y y))", "(= 2 x)", "(hole)", "(= (+ x) y)", "(forall and (= x x))"}) {
    expect_code(ErrorCode::ParseError, [&] { parse_formula(bad); });
  }
}

TEST(Logic, RandomRoundTrip) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = random_formula(rng, {"x", "y", "z"}, 4, 3);
    const std::string text = print(f);
    const Formula g = parse_formula(text);
    EXPECT_TRUE(equal(f, g)) << text;
    EXPECT_EQ(print(g), text);
  }
}

TEST(Logic, NegationAndDuality) {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const FieldPtr f = make_prime_field(q);
    for (int i = 0; i < 400; ++i) {
      const Formula phi = random_formula(rng, {"x", "y"}, 3, 2);
      const Assignment a{{"x", static_cast<Code>(rng() % q)}, {"y", static_cast<Code>(rng() % q)}};
      EXPECT_EQ(eval(f_not(f_exists("x", phi)), f, a), eval(f_forall("x", f_not(phi)), f, a));
      EXPECT_EQ(eval(f_not(f_forall("y", phi)), f, a), eval(f_exists("y", f_not(phi)), f, a));
      EXPECT_EQ(eval(f_not(f_not(phi)), f, a), eval(phi, f, a));
      ++checked;
    }
  }
  EXPECT_GE(checked, 1000);
}

TEST(Logic, FreeVariablesAndShadowing) {
  const Formula f = parse_formula("(and (= x y) (exists x (= (* x z) 1)))");
  EXPECT_EQ(free_variables(f), (std::set<std::string>{"x", "y", "z"}));
  const Formula g = parse_formula("(exists x (and (= x 1) (exists x (= x 0))))");
  EXPECT_TRUE(free_variables(g).empty());
  // inner binding shadows: exists x with x = 0 is true
  EXPECT_TRUE(eval(g, make_prime_field(3)));
  const QuantifierCount c = count_quantifiers(parse_formula("(forall a (exists b (exists c (= a b))))"));
  EXPECT_EQ(c.forall, 1u);
  EXPECT_EQ(c.exists, 2u);
}

TEST(Logic, CaptureAvoidingSubstitution) {
  const Formula f = parse_formula("(exists y (= (* x y) 1))");
  const Formula g = substitute(f, "x", t_var("y"));
  EXPECT_EQ(free_variables(g), (std::set<std::string>{"y"}));
  const FieldPtr f5 = make_prime_field(5);
  for (Code v = 0; v < 5; ++v) EXPECT_EQ(eval(g, f5, {{"y", v}}), v != 0);
  EXPECT_TRUE(equal(substitute(f, "y", t_one()), f));
  const Formula h = parse_formula("(hole P x)");
  EXPECT_EQ(print(substitute(h, "x", t_var("w"))), "(hole P w)");
  expect_code(ErrorCode::InvalidArgument, [&] { substitute(h, "x", t_one()); });
}

TEST(Logic, PlaceholdersAndBindings) {
  const Formula f = parse_formula("(forall x (implies (hole SQ x) (exists y (= (* y y) x))))");
  EXPECT_EQ(placeholders(f), (std::map<std::string, std::size_t>{{"SQ", 1}}));
  const FieldPtr f7 = make_prime_field(7);
  expect_code(ErrorCode::UnboundPlaceholder, [&] { eval(f, f7); });
  Bindings b{{"SQ", parse_binding("(lambda (v) (exists w (= (* w w) v)))")}};
  EXPECT_TRUE(eval(f, f7, {}, b));
  b["SQ"] = parse_binding("(= x x)");
  EXPECT_FALSE(eval(f, f7, {}, b));
  b["SQ"] = parse_binding("(lambda (a b) (= a b))");
  expect_code(ErrorCode::InvalidArgument, [&] { eval(f, f7, {}, b); });
  expect_code(ErrorCode::InvalidArgument,
              [] { placeholders(parse_formula("(and (hole P x) (hole P x y))")); });
  expect_code(ErrorCode::InvalidArgument, [] { make_binding({"x"}, parse_formula("(= x y)")); });
}

TEST(Logic, RecursiveBindingsRejected) {
  const Formula f = parse_formula("(hole A x)");
  Bindings b{{"A", parse_binding("(lambda (x) (hole B x))")}, {"B", parse_binding("(lambda (y) (hole A y))")}};
  expect_code(ErrorCode::InvalidArgument, [&] { eval(f, make_prime_field(2), {{"x", 0}}, b); });
}

TEST(Logic, NestedBindingsEvaluate) {
  const Formula f = parse_formula("(forall x (hole OUTER x))");
  Bindings b{{"OUTER", parse_binding("(lambda (x) (or (hole INNER x) (not (hole INNER x))))")},
             {"INNER", parse_binding("(lambda (v) (= v 0))")}};
  EXPECT_TRUE(eval(f, make_prime_field(5), {}, b));
}

TEST(Logic, AssignmentErrors) {
  const Formula f = parse_formula("(= x y)");
  const FieldPtr f3 = make_prime_field(3);
  expect_code(ErrorCode::UnassignedVariable, [&] { eval(f, f3, {{"x", 1}}); });
  EXPECT_TRUE(eval(f, f3, {{"x", 1}, {"y", 1}}));
  expect_code(ErrorCode::InvalidArgument, [&] { eval(f, f3, {{"x", 1}, {"y", 5}}); });
}

TEST(Logic, BudgetIsReproducible) {
  const Formula f = parse_formula("(forall a (forall b (forall c (= (* a (+ b c)) (+ (* a b) (* a c))))))");
  const FieldPtr f11 = make_prime_field(11);
  EvalStats stats;
  EXPECT_TRUE(eval(f, f11, {}, {}, {}, &stats));
  EXPECT_EQ(stats.visits, 11u + 121u + 1331u);
  expect_code(ErrorCode::BudgetExceeded, [&] { eval(f, f11, {}, {}, EvalOptions{1000}); });
  const Formula e = parse_formula("(exists a (= a (+ 1 (+ 1 1))))");
  EXPECT_TRUE(eval(e, f11, {}, {}, {}, &stats));
  EXPECT_EQ(stats.visits, 4u);
}

TEST(Logic, TermEvaluation) {
  const FieldPtr f = make_field_of_order(9);
  const Term t = t_sum({t_pow(t_var("x"), 3), t_one(), t_mul(t_var("x"), t_var("x"))});
  for (Code x = 0; x < 9; ++x)
    EXPECT_EQ(eval_term(t, f, {{"x", x}}), f->add(f->add(f->pow(x, 3), 1), f->mul(x, x)));
  EXPECT_EQ(print(t_sum({})), "0");
  EXPECT_EQ(print(f_and_all({})), "(= 0 0)");
}
