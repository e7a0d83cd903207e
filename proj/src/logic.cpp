#include "fgf/logic.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "fgf/sexp.hpp"

namespace fgf {

Term t_zero() {
  static const Term z = std::make_shared<const TermNode>(TermNode{TermKind::Zero, {}, nullptr, nullptr});
  return z;
}
Term t_one() {
  static const Term o = std::make_shared<const TermNode>(TermNode{TermKind::One, {}, nullptr, nullptr});
  return o;
}
Term t_var(std::string name) {
  return std::make_shared<const TermNode>(TermNode{TermKind::Var, std::move(name), nullptr, nullptr});
}
Term t_add(Term a, Term b) {
  return std::make_shared<const TermNode>(TermNode{TermKind::Add, {}, std::move(a), std::move(b)});
}
Term t_sub(Term a, Term b) {
  return std::make_shared<const TermNode>(TermNode{TermKind::Sub, {}, std::move(a), std::move(b)});
}
Term t_mul(Term a, Term b) {
  return std::make_shared<const TermNode>(TermNode{TermKind::Mul, {}, std::move(a), std::move(b)});
}

Term t_pow(const Term& a, unsigned e) {
  if (e == 0) throw Error(ErrorCode::InvalidArgument, "exponent must be positive");
  Term out = a;
  for (unsigned i = 1; i < e; ++i) out = t_mul(out, a);
  return out;
}

Term t_sum(const std::vector<Term>& terms) {
  if (terms.empty()) return t_zero();
  Term out = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) out = t_add(out, terms[i]);
  return out;
}

Formula f_eq(Term a, Term b) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Eq;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

Formula f_not(Formula a) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Not;
  n->a = std::move(a);
  return n;
}

static Formula binary(FormulaKind k, Formula a, Formula b) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

Formula f_and(Formula a, Formula b) { return binary(FormulaKind::And, std::move(a), std::move(b)); }
Formula f_or(Formula a, Formula b) { return binary(FormulaKind::Or, std::move(a), std::move(b)); }
Formula f_implies(Formula a, Formula b) { return binary(FormulaKind::Implies, std::move(a), std::move(b)); }

static Formula quant(FormulaKind k, std::string var, Formula body) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  n->name = std::move(var);
  n->a = std::move(body);
  return n;
}

Formula f_exists(std::string var, Formula body) { return quant(FormulaKind::Exists, std::move(var), std::move(body)); }
Formula f_forall(std::string var, Formula body) { return quant(FormulaKind::Forall, std::move(var), std::move(body)); }

Formula f_hole(std::string name, std::vector<std::string> args) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = FormulaKind::Hole;
  n->name = std::move(name);
  n->args = std::move(args);
  return n;
}

Formula f_and_all(const std::vector<Formula>& parts) {
  if (parts.empty()) return f_eq(t_zero(), t_zero());
  Formula out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out = f_and(out, parts[i]);
  return out;
}

Formula f_exists_all(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = f_exists(*it, body);
  return body;
}

Formula f_forall_all(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = f_forall(*it, body);
  return body;
}

bool equal(const Term& a, const Term& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Zero:
    case TermKind::One: return true;
    case TermKind::Var: return a->name == b->name;
    default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
}

bool equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case FormulaKind::Eq: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    case FormulaKind::Not: return equal(a->a, b->a);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: return equal(a->a, b->a) && equal(a->b, b->b);
    case FormulaKind::Exists:
    case FormulaKind::Forall: return a->name == b->name && equal(a->a, b->a);
    case FormulaKind::Hole: return a->name == b->name && a->args == b->args;
  }
  return false;
}

namespace {

void print_to(std::string& out, const Term& t) {
  switch (t->kind) {
    case TermKind::Zero: out += '0'; return;
    case TermKind::One: out += '1'; return;
    case TermKind::Var: out += t->name; return;
    case TermKind::Add: out += "(+ "; break;
    case TermKind::Sub: out += "(- "; break;
    case TermKind::Mul: out += "(* "; break;
  }
  print_to(out, t->lhs);
  out += ' ';
  print_to(out, t->rhs);
  out += ')';
}

void print_to(std::string& out, const Formula& f) {
  switch (f->kind) {
    case FormulaKind::Eq:
      out += "(= ";
      print_to(out, f->lhs);
      out += ' ';
      print_to(out, f->rhs);
      out += ')';
      return;
    case FormulaKind::Not:
      out += "(not ";
      print_to(out, f->a);
      out += ')';
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      out += f->kind == FormulaKind::And ? "(and " : f->kind == FormulaKind::Or ? "(or " : "(implies ";
      print_to(out, f->a);
      out += ' ';
      print_to(out, f->b);
      out += ')';
      return;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      out += f->kind == FormulaKind::Exists ? "(exists " : "(forall ";
      out += f->name;
      out += ' ';
      print_to(out, f->a);
      out += ')';
      return;
    case FormulaKind::Hole:
      out += "(hole " + f->name;
      for (const auto& a : f->args) out += ' ' + a;
      out += ')';
      return;
  }
}

const std::set<std::string>& reserved() {
  static const std::set<std::string> r{"+",      "-",     "*",      "=",    "not",  "and",
                                       "or",     "implies", "exists", "forall", "hole", "lambda"};
  return r;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || reserved().count(s)) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

std::string variable_name(const Sexp& s) {
  if (s.is_list || !is_identifier(s.atom)) parse_fail(s.offset, "expected a variable name");
  return s.atom;
}

void expect_arity(const Sexp& s, std::size_t n) {
  if (s.items.size() != n + 1)
    parse_fail(s.offset, "'" + s.items[0].atom + "' takes " + std::to_string(n) + " argument(s), got " +
                             std::to_string(s.items.size() - 1));
}

Term term_from(const Sexp& s) {
  if (!s.is_list) {
    if (s.atom == "0") return t_zero();
    if (s.atom == "1") return t_one();
    return t_var(variable_name(s));
  }
  if (s.items.empty() || s.items[0].is_list) parse_fail(s.offset, "expected a term operator");
  const std::string& op = s.items[0].atom;
  if (op != "+" && op != "-" && op != "*") parse_fail(s.offset, "unknown term operator '" + op + "'");
  expect_arity(s, 2);
  Term a = term_from(s.items[1]), b = term_from(s.items[2]);
  if (op == "+") return t_add(a, b);
  if (op == "-") return t_sub(a, b);
  return t_mul(a, b);
}

Formula formula_from(const Sexp& s) {
  if (!s.is_list || s.items.empty() || s.items[0].is_list) parse_fail(s.offset, "expected a formula");
  const std::string& op = s.items[0].atom;
  if (op == "=") {
    expect_arity(s, 2);
    return f_eq(term_from(s.items[1]), term_from(s.items[2]));
  }
  if (op == "not") {
    expect_arity(s, 1);
    return f_not(formula_from(s.items[1]));
  }
  if (op == "and" || op == "or" || op == "implies") {
    expect_arity(s, 2);
    Formula a = formula_from(s.items[1]), b = formula_from(s.items[2]);
    return op == "and" ? f_and(a, b) : op == "or" ? f_or(a, b) : f_implies(a, b);
  }
  if (op == "exists" || op == "forall") {
    expect_arity(s, 2);
    std::string v = variable_name(s.items[1]);
    Formula body = formula_from(s.items[2]);
    return op == "exists" ? f_exists(std::move(v), body) : f_forall(std::move(v), body);
  }
  if (op == "hole") {
    if (s.items.size() < 2) parse_fail(s.offset, "hole needs a name");
    const Sexp& nm = s.items[1];
    if (nm.is_list || !is_identifier(nm.atom)) parse_fail(nm.offset, "bad placeholder name");
    std::vector<std::string> args;
    for (std::size_t i = 2; i < s.items.size(); ++i) args.push_back(variable_name(s.items[i]));
    return f_hole(nm.atom, std::move(args));
  }
  parse_fail(s.items[0].offset, "unknown formula operator '" + op + "'");
}

void collect_free(const Term& t, std::set<std::string>& out) {
  if (t->kind == TermKind::Var) out.insert(t->name);
  if (t->lhs) collect_free(t->lhs, out);
  if (t->rhs) collect_free(t->rhs, out);
}

void collect_free(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (f->kind) {
    case FormulaKind::Eq: {
      std::set<std::string> vs;
      collect_free(f->lhs, vs);
      collect_free(f->rhs, vs);
      for (const auto& v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case FormulaKind::Hole:
      for (const auto& v : f->args)
        if (!bound.count(v)) out.insert(v);
      return;
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      const bool inserted = bound.insert(f->name).second;
      collect_free(f->a, bound, out);
      if (inserted) bound.erase(f->name);
      return;
    }
    default:
      collect_free(f->a, bound, out);
      if (f->b) collect_free(f->b, bound, out);
  }
}

}  // namespace

std::string print(const Term& t) {
  std::string out;
  print_to(out, t);
  return out;
}

std::string print(const Formula& f) {
  std::string out;
  print_to(out, f);
  return out;
}

Term parse_term(std::string_view text) { return term_from(read_sexp(text)); }
Formula parse_formula(std::string_view text) { return formula_from(read_sexp(text)); }

std::set<std::string> free_variables(const Term& t) {
  std::set<std::string> out;
  collect_free(t, out);
  return out;
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::map<std::string, std::size_t> placeholders(const Formula& f) {
  std::map<std::string, std::size_t> out;
  std::vector<const FormulaNode*> stack{f.get()};
  while (!stack.empty()) {
    const FormulaNode* n = stack.back();
    stack.pop_back();
    if (n->kind == FormulaKind::Hole) {
      auto [it, fresh] = out.emplace(n->name, n->args.size());
      if (!fresh && it->second != n->args.size())
        throw Error(ErrorCode::InvalidArgument, "placeholder " + n->name + " used with different arities");
      continue;
    }
    if (n->a) stack.push_back(n->a.get());
    if (n->b) stack.push_back(n->b.get());
  }
  return out;
}

QuantifierCount count_quantifiers(const Formula& f) {
  QuantifierCount c;
  std::vector<const FormulaNode*> stack{f.get()};
  while (!stack.empty()) {
    const FormulaNode* n = stack.back();
    stack.pop_back();
    if (n->kind == FormulaKind::Exists) ++c.exists;
    if (n->kind == FormulaKind::Forall) ++c.forall;
    if (n->a) stack.push_back(n->a.get());
    if (n->b) stack.push_back(n->b.get());
  }
  return c;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (unsigned i = 1;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

Term substitute(const Term& t, const std::string& var, const Term& replacement) {
  switch (t->kind) {
    case TermKind::Zero:
    case TermKind::One: return t;
    case TermKind::Var: return t->name == var ? replacement : t;
    default: {
      Term l = substitute(t->lhs, var, replacement), r = substitute(t->rhs, var, replacement);
      if (l == t->lhs && r == t->rhs) return t;
      auto n = std::make_shared<TermNode>(*t);
      n->lhs = std::move(l);
      n->rhs = std::move(r);
      return n;
    }
  }
}

Formula substitute(const Formula& f, const std::string& var, const Term& replacement) {
  switch (f->kind) {
    case FormulaKind::Eq:
      return f_eq(substitute(f->lhs, var, replacement), substitute(f->rhs, var, replacement));
    case FormulaKind::Not: return f_not(substitute(f->a, var, replacement));
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return binary(f->kind, substitute(f->a, var, replacement), substitute(f->b, var, replacement));
    case FormulaKind::Hole: {
      if (std::find(f->args.begin(), f->args.end(), var) == f->args.end()) return f;
      if (replacement->kind != TermKind::Var)
        throw Error(ErrorCode::InvalidArgument, "placeholder arguments must stay variables");
      std::vector<std::string> args = f->args;
      for (auto& a : args)
        if (a == var) a = replacement->name;
      return f_hole(f->name, std::move(args));
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall: {
      if (f->name == var) return f;
      const auto body_free = free_variables(f->a);
      if (!body_free.count(var)) return f;
      const auto repl_free = free_variables(replacement);
      if (!repl_free.count(f->name)) return quant(f->kind, f->name, substitute(f->a, var, replacement));
      std::set<std::string> avoid = body_free;
      avoid.insert(repl_free.begin(), repl_free.end());
      avoid.insert(var);
      const std::string renamed = fresh_name(f->name, avoid);
      Formula body = substitute(f->a, f->name, t_var(renamed));
      return quant(f->kind, renamed, substitute(body, var, replacement));
    }
  }
  return f;
}

Binding make_binding(std::vector<std::string> params, Formula body) {
  std::set<std::string> seen;
  for (const auto& p : params)
    if (!seen.insert(p).second) throw Error(ErrorCode::InvalidArgument, "repeated parameter " + p);
  for (const auto& v : free_variables(body))
    if (!seen.count(v)) throw Error(ErrorCode::InvalidArgument, "binding body has free variable " + v);
  return Binding{std::move(params), std::move(body)};
}

Binding parse_binding(std::string_view text) {
  const Sexp s = read_sexp(text);
  if (s.is_list && !s.items.empty() && s.items[0].is_atom("lambda")) {
    expect_arity(s, 2);
    if (!s.items[1].is_list) parse_fail(s.items[1].offset, "lambda needs a parameter list");
    std::vector<std::string> params;
    for (const Sexp& p : s.items[1].items) params.push_back(variable_name(p));
    return make_binding(std::move(params), formula_from(s.items[2]));
  }
  Formula body = formula_from(s);
  const auto fv = free_variables(body);
  return make_binding(std::vector<std::string>(fv.begin(), fv.end()), body);
}

namespace {

struct CTerm {
  TermKind kind;
  int slot = -1;
  std::unique_ptr<CTerm> l, r;
};

struct CBinding;

struct CForm {
  FormulaKind kind;
  std::unique_ptr<CTerm> tl, tr;
  std::unique_ptr<CForm> a, b;
  int slot = -1;
  const CBinding* hole = nullptr;
  std::vector<int> arg_slots;
};

struct CBinding {
  std::unique_ptr<CForm> body;
  int slots = 0;
};

class Compiler {
 public:
  explicit Compiler(const Bindings& bindings) : bindings_(bindings) {}

  std::unique_ptr<CForm> compile_top(const Formula& f, const Assignment& assignment, std::vector<Code>& env,
                                     const Field& field) {
    int slots = 0;
    Scope scope;
    for (const auto& v : free_variables(f)) {
      auto it = assignment.find(v);
      if (it == assignment.end()) throw Error(ErrorCode::UnassignedVariable, "no value for free variable " + v);
      if (!field.valid(it->second)) throw Error(ErrorCode::InvalidArgument, "value of " + v + " is not in " + field.name());
      scope[v].push_back(slots++);
      env.push_back(it->second);
    }
    auto out = form(f, scope, slots);
    env.resize(static_cast<std::size_t>(slots), 0);
    return out;
  }

 private:
  using Scope = std::unordered_map<std::string, std::vector<int>>;

  std::unique_ptr<CTerm> term(const Term& t, const Scope& scope) {
    auto c = std::make_unique<CTerm>();
    c->kind = t->kind;
    if (t->kind == TermKind::Var) c->slot = lookup(scope, t->name);
    if (t->lhs) c->l = term(t->lhs, scope);
    if (t->rhs) c->r = term(t->rhs, scope);
    return c;
  }

  static int lookup(const Scope& scope, const std::string& name) {
    auto it = scope.find(name);
    if (it == scope.end() || it->second.empty()) throw Error(ErrorCode::UnassignedVariable, "no value for variable " + name);
    return it->second.back();
  }

  std::unique_ptr<CForm> form(const Formula& f, Scope& scope, int& slots) {
    auto c = std::make_unique<CForm>();
    c->kind = f->kind;
    switch (f->kind) {
      case FormulaKind::Eq:
        c->tl = term(f->lhs, scope);
        c->tr = term(f->rhs, scope);
        break;
      case FormulaKind::Not: c->a = form(f->a, scope, slots); break;
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Implies:
        c->a = form(f->a, scope, slots);
        c->b = form(f->b, scope, slots);
        break;
      case FormulaKind::Exists:
      case FormulaKind::Forall: {
        c->slot = slots++;
        scope[f->name].push_back(c->slot);
        c->a = form(f->a, scope, slots);
        scope[f->name].pop_back();
        break;
      }
      case FormulaKind::Hole: {
        c->hole = binding(f->name, f->args.size());
        for (const auto& a : f->args) c->arg_slots.push_back(lookup(scope, a));
        break;
      }
    }
    return c;
  }

  const CBinding* binding(const std::string& name, std::size_t arity) {
    auto done = compiled_.find(name);
    if (done != compiled_.end()) {
      if (arity_[name] != arity) throw Error(ErrorCode::InvalidArgument, "placeholder " + name + " arity mismatch");
      return done->second.get();
    }
    auto it = bindings_.find(name);
    if (it == bindings_.end()) throw Error(ErrorCode::UnboundPlaceholder, "placeholder " + name + " is not bound");
    const Binding& b = it->second;
    if (b.params.size() != arity)
      throw Error(ErrorCode::InvalidArgument, "placeholder " + name + " has arity " + std::to_string(arity) +
                                                  " but its binding takes " + std::to_string(b.params.size()));
    if (!in_progress_.insert(name).second)
      throw Error(ErrorCode::InvalidArgument, "placeholder " + name + " is bound recursively");
    auto cb = std::make_unique<CBinding>();
    Scope scope;
    int slots = 0;
    for (const auto& p : b.params) scope[p].push_back(slots++);
    cb->body = form(b.body, scope, slots);
    cb->slots = slots;
    in_progress_.erase(name);
    arity_[name] = arity;
    return (compiled_[name] = std::move(cb)).get();
  }

  const Bindings& bindings_;
  std::map<std::string, std::unique_ptr<CBinding>> compiled_;
  std::map<std::string, std::size_t> arity_;
  std::set<std::string> in_progress_;
};

struct Evaluator {
  const Field& f;
  std::uint64_t budget;
  std::uint64_t visits = 0;

  Code term(const CTerm& t, const std::vector<Code>& env) const {
    switch (t.kind) {
      case TermKind::Zero: return 0;
      case TermKind::One: return 1;
      case TermKind::Var: return env[static_cast<std::size_t>(t.slot)];
      case TermKind::Add: return f.add(term(*t.l, env), term(*t.r, env));
      case TermKind::Sub: return f.sub(term(*t.l, env), term(*t.r, env));
      case TermKind::Mul: return f.mul(term(*t.l, env), term(*t.r, env));
    }
    return 0;
  }

  bool form(const CForm& c, std::vector<Code>& env) {
    switch (c.kind) {
      case FormulaKind::Eq: return term(*c.tl, env) == term(*c.tr, env);
      case FormulaKind::Not: return !form(*c.a, env);
      case FormulaKind::And: return form(*c.a, env) && form(*c.b, env);
      case FormulaKind::Or: return form(*c.a, env) || form(*c.b, env);
      case FormulaKind::Implies: return !form(*c.a, env) || form(*c.b, env);
      case FormulaKind::Exists:
      case FormulaKind::Forall: {
        const bool want = c.kind == FormulaKind::Exists;
        const auto slot = static_cast<std::size_t>(c.slot);
        for (Code v = 0; v < f.order(); ++v) {
          if (++visits > budget)
            throw Error(ErrorCode::BudgetExceeded, "evaluation exceeded " + std::to_string(budget) + " visits");
          env[slot] = v;
          if (form(*c.a, env) == want) return want;
        }
        return !want;
      }
      case FormulaKind::Hole: {
        std::vector<Code> inner(static_cast<std::size_t>(c.hole->slots), 0);
        for (std::size_t i = 0; i < c.arg_slots.size(); ++i) inner[i] = env[static_cast<std::size_t>(c.arg_slots[i])];
        return form(*c.hole->body, inner);
      }
    }
    return false;
  }
};

}  // namespace

bool eval(const Formula& f, const FieldPtr& field, const Assignment& assignment, const Bindings& bindings,
          const EvalOptions& options, EvalStats* stats) {
  Compiler compiler(bindings);
  std::vector<Code> env;
  auto compiled = compiler.compile_top(f, assignment, env, *field);
  Evaluator ev{*field, options.budget};
  const bool result = ev.form(*compiled, env);
  if (stats) stats->visits = ev.visits;
  return result;
}

Code eval_term(const Term& t, const FieldPtr& field, const Assignment& assignment) {
  switch (t->kind) {
    case TermKind::Zero: return 0;
    case TermKind::One: return 1;
    case TermKind::Var: {
      auto it = assignment.find(t->name);
      if (it == assignment.end()) throw Error(ErrorCode::UnassignedVariable, "no value for variable " + t->name);
      return it->second;
    }
    case TermKind::Add: return field->add(eval_term(t->lhs, field, assignment), eval_term(t->rhs, field, assignment));
    case TermKind::Sub: return field->sub(eval_term(t->lhs, field, assignment), eval_term(t->rhs, field, assignment));
    case TermKind::Mul: return field->mul(eval_term(t->lhs, field, assignment), eval_term(t->rhs, field, assignment));
  }
  return 0;
}

Term random_term(std::mt19937_64& rng, const std::vector<std::string>& vars, unsigned depth) {
  const std::uint64_t leaves = 2 + vars.size();
  if (depth == 0 || rng() % 3 == 0) {
    const std::uint64_t k = rng() % leaves;
    if (k == 0) return t_zero();
    if (k == 1) return t_one();
    return t_var(vars[k - 2]);
  }
  Term a = random_term(rng, vars, depth - 1), b = random_term(rng, vars, depth - 1);
  switch (rng() % 3) {
    case 0: return t_add(a, b);
    case 1: return t_sub(a, b);
    default: return t_mul(a, b);
  }
}

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& vars, unsigned depth,
                       unsigned max_quantifiers) {
  if (depth == 0) return f_eq(random_term(rng, vars, 2), random_term(rng, vars, 2));
  const unsigned choices = max_quantifiers > 0 ? 7 : 5;
  switch (rng() % choices) {
    case 0: return f_eq(random_term(rng, vars, 2), random_term(rng, vars, 2));
    case 1: return f_not(random_formula(rng, vars, depth - 1, max_quantifiers));
    case 2:
      return f_and(random_formula(rng, vars, depth - 1, max_quantifiers),
                   random_formula(rng, vars, depth - 1, max_quantifiers));
    case 3:
      return f_or(random_formula(rng, vars, depth - 1, max_quantifiers),
                  random_formula(rng, vars, depth - 1, max_quantifiers));
    case 4:
      return f_implies(random_formula(rng, vars, depth - 1, max_quantifiers),
                       random_formula(rng, vars, depth - 1, max_quantifiers));
    default: {
      std::set<std::string> avoid(vars.begin(), vars.end());
      const std::string v = fresh_name("q" + std::to_string(vars.size()), avoid);
      std::vector<std::string> inner = vars;
      inner.push_back(v);
      Formula body = random_formula(rng, inner, depth - 1, max_quantifiers - 1);
      return rng() % 2 ? f_exists(v, body) : f_forall(v, body);
    }
  }
}

}  // namespace fgf
