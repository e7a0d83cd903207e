#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fgf/galois.hpp"

namespace fgf {

enum class TermKind { Zero, One, Var, Add, Sub, Mul };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  std::string name;  // Var
  Term lhs, rhs;     // Add, Sub, Mul
};

Term t_zero();
Term t_one();
Term t_var(std::string name);
Term t_add(Term a, Term b);
Term t_sub(Term a, Term b);
Term t_mul(Term a, Term b);
/// a^e as left-nested products (e >= 1).
Term t_pow(const Term& a, unsigned e);
/// Left-nested sum; empty sums are 0.
Term t_sum(const std::vector<Term>& terms);

enum class FormulaKind { Eq, Not, And, Or, Implies, Exists, Forall, Hole };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  FormulaKind kind;
  Term lhs, rhs;                   // Eq
  Formula a, b;                    // connectives and quantifier body (a)
  std::string name;                // bound variable, or placeholder name
  std::vector<std::string> args;   // Hole arguments (variables)
};

Formula f_eq(Term a, Term b);
Formula f_not(Formula a);
Formula f_and(Formula a, Formula b);
Formula f_or(Formula a, Formula b);
Formula f_implies(Formula a, Formula b);
Formula f_exists(std::string var, Formula body);
Formula f_forall(std::string var, Formula body);
Formula f_hole(std::string name, std::vector<std::string> args);
/// Left-nested conjunction; the empty conjunction is 0 = 0.
Formula f_and_all(const std::vector<Formula>& parts);
Formula f_exists_all(const std::vector<std::string>& vars, Formula body);
Formula f_forall_all(const std::vector<std::string>& vars, Formula body);

bool equal(const Term& a, const Term& b);
bool equal(const Formula& a, const Formula& b);

std::string print(const Term& t);
std::string print(const Formula& f);
Term parse_term(std::string_view text);
/// Grammar: atoms 0, 1 and variable names; (+ a b) (- a b) (* a b) (= a b)
/// (not f) (and f g) (or f g) (implies f g) (exists x f) (forall x f)
/// (hole NAME x ...). Throws ParseError with the offset.
Formula parse_formula(std::string_view text);

std::set<std::string> free_variables(const Term& t);
std::set<std::string> free_variables(const Formula& f);
/// Placeholder name -> arity; InvalidArgument if arities disagree.
std::map<std::string, std::size_t> placeholders(const Formula& f);

struct QuantifierCount {
  std::size_t exists = 0;
  std::size_t forall = 0;
};
QuantifierCount count_quantifiers(const Formula& f);

/// Capture-avoiding replacement of the free occurrences of `var`. Inside
/// holes only variable replacements are possible (InvalidArgument otherwise).
Formula substitute(const Formula& f, const std::string& var, const Term& replacement);
Term substitute(const Term& t, const std::string& var, const Term& replacement);

/// A name not in `avoid`, built from `base`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

/// Concrete formula for a placeholder: parameters in argument order; every
/// free variable of the body must be a parameter.
struct Binding {
  std::vector<std::string> params;
  Formula body;
};
using Bindings = std::map<std::string, Binding>;

/// `(lambda (x ...) f)`, or a bare formula whose parameters are its free
/// variables in sorted order.
Binding parse_binding(std::string_view text);
Binding make_binding(std::vector<std::string> params, Formula body);

using Assignment = std::map<std::string, Code>;

inline constexpr std::uint64_t kDefaultEvalBudget = 10'000'000;

struct EvalOptions {
  std::uint64_t budget = kDefaultEvalBudget;  // quantifier assignment visits
};

struct EvalStats {
  std::uint64_t visits = 0;
};

/// Tarskian truth over a finite field. Quantifiers range over codes in
/// increasing order and short-circuit. Throws UnboundPlaceholder,
/// UnassignedVariable, BudgetExceeded.
bool eval(const Formula& f, const FieldPtr& field, const Assignment& assignment = {}, const Bindings& bindings = {},
          const EvalOptions& options = {}, EvalStats* stats = nullptr);
Code eval_term(const Term& t, const FieldPtr& field, const Assignment& assignment);

/// Seeded random formula whose free variables are drawn from `vars`.
/// Quantifiers introduce fresh names; nesting is at most `max_quantifiers`.
Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& vars, unsigned depth,
                       unsigned max_quantifiers);
Term random_term(std::mt19937_64& rng, const std::vector<std::string>& vars, unsigned depth);

}  // namespace fgf
