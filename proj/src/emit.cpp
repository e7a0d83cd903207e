#include "fgf/emit.hpp"

#include <charconv>

namespace fgf {

namespace {

Term mul(const Term& a, const Term& b) {
  if (a->kind == TermKind::One) return b;
  if (b->kind == TermKind::One) return a;
  return t_mul(a, b);
}

Term neg(const Term& a) { return t_sub(t_zero(), a); }

Term cubic(const Term& x) {
  return t_add(t_add(t_pow(x, 3), t_mul(t_var("a"), x)), t_var("b"));
}

std::set<std::string> vars_of(const std::vector<Term>& terms) {
  std::set<std::string> out;
  for (const auto& t : terms) {
    auto fv = free_variables(t);
    out.insert(fv.begin(), fv.end());
  }
  return out;
}

std::vector<std::string> fresh_names(const std::string& base, std::size_t n, std::set<std::string>& avoid) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) {
    out.push_back(fresh_name(base + std::to_string(i), avoid));
    avoid.insert(out.back());
  }
  return out;
}

Formula all_zero(const std::vector<std::string>& names) {
  std::vector<Formula> eqs;
  for (const auto& v : names) eqs.push_back(f_eq(t_var(v), t_zero()));
  return f_and_all(eqs);
}

Formula nonzero(const Term& t) { return f_not(f_eq(t, t_zero())); }

Formula hole1(const std::string& name, const std::string& v) { return f_hole(name, {v}); }

// U1(v) for the twist f(u) y^2 = f(v), with a fresh witness name.
Formula twist_x(const std::string& v, const std::string& y) {
  return f_eq(t_mul(cubic(t_var("u")), t_mul(t_var(y), t_var(y))), cubic(t_var(v)));
}

unsigned parse_uint(const std::string& s) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::InvalidArgument, "expected an integer, got '" + s + "'");
  return v;
}

}  // namespace

std::vector<Term> tensor_terms(const std::vector<Term>& f, const std::vector<Term>& g) {
  std::vector<Term> out;
  out.reserve(f.size() * g.size());
  for (const auto& a : f)
    for (const auto& b : g) out.push_back(mul(a, b));
  return out;
}

std::vector<Term> pfister_terms(unsigned d, const std::vector<Term>& slots) {
  std::vector<Term> out{t_one()};
  for (const auto& s : slots) {
    std::vector<Term> slot{t_one()};
    for (unsigned k = 1; k < d; ++k) slot.push_back(mul(slot.back(), s));
    out = tensor_terms(out, slot);
  }
  return out;
}

Formula emit_represents_zero(std::size_t n, unsigned d) {
  std::vector<Term> cs;
  for (std::size_t i = 1; i <= n; ++i) cs.push_back(t_var("c" + std::to_string(i)));
  return emit_represents_zero(cs, d);
}

Formula emit_represents_zero(const std::vector<Term>& coeffs, unsigned d, const std::string& base) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  std::set<std::string> avoid = vars_of(coeffs);
  const auto xs = fresh_names(base, coeffs.size(), avoid);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) terms.push_back(t_mul(coeffs[i], t_pow(t_var(xs[i]), d)));
  return f_exists_all(xs, f_and(f_eq(t_sum(terms), t_zero()), f_not(all_zero(xs))));
}

Formula emit_represents_zero_pair(const std::vector<Term>& coeffs, const std::string& base) {
  std::set<std::string> avoid = vars_of(coeffs);
  const auto xs = fresh_names(base, coeffs.size(), avoid);
  const auto ys = fresh_names("y", coeffs.size(), avoid);
  std::vector<Term> re, im;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Term x = t_var(xs[i]), y = t_var(ys[i]);
    re.push_back(t_mul(coeffs[i], t_sub(t_mul(x, x), t_mul(y, y))));
    im.push_back(t_mul(coeffs[i], t_mul(t_add(t_one(), t_one()), t_mul(x, y))));
    vars.push_back(xs[i]);
    vars.push_back(ys[i]);
  }
  const Formula core =
      f_and(f_and(f_eq(t_sum(re), t_zero()), f_eq(t_sum(im), t_zero())), f_not(all_zero(vars)));
  return f_exists_all(vars, core);
}

Formula emit_S_family() {
  const Term x = t_var("x"), y = t_var("y");
  return f_exists_all({"x", "y"}, f_and_all({f_eq(t_mul(y, y), cubic(x)), nonzero(y), f_eq(t_mul(t_var("s"), y), x)}));
}

Formula emit_T_family() {
  const Formula S = emit_S_family();
  const Formula s1 = substitute(S, "s", t_var("s1"));
  const Formula s2 = substitute(S, "s", t_var("s2"));
  return f_exists_all({"s1", "s2"}, f_and_all({s1, s2, nonzero(t_var("s1")), nonzero(t_var("s2")),
                                               f_eq(t_mul(t_var("t"), t_var("s2")), t_var("s1"))}));
}

Formula emit_A_S(const Formula& S, const std::string& var) {
  std::set<std::string> avoid = free_variables(S);
  avoid.erase(var);
  if (avoid.count("t")) throw Error(ErrorCode::InvalidArgument, "S must not use t as a parameter");
  avoid.insert("t");
  const auto ss = fresh_names("s", 3, avoid);
  std::vector<Formula> members;
  for (const auto& s : ss) members.push_back(substitute(S, var, t_var(s)));
  const auto coeffs = pfister_terms(2, {t_var(ss[0]), t_var(ss[1]), t_sub(t_var("t"), t_var(ss[2]))});
  return f_forall_all(ss, f_implies(f_and_all(members), emit_represents_zero_pair(coeffs)));
}

Formula emit_char0_sentence(const std::string& placeholder) {
  const Term x = t_var("x"), y = t_var("y");
  const Formula closed = f_forall_all(
      {"x", "y"}, f_implies(f_and(hole1(placeholder, "x"), hole1(placeholder, "y")),
                            f_exists("z", f_and(f_eq(t_var("z"), t_add(x, y)), hole1(placeholder, "z")))));
  const Formula not_doubled =
      f_exists("x", f_and(hole1(placeholder, "x"),
                          f_forall("y", f_implies(hole1(placeholder, "y"), f_not(f_eq(x, t_add(y, y)))))));
  const Formula odd = f_not(f_eq(t_add(t_one(), t_one()), t_zero()));
  return f_and_all({closed, not_doubled, odd});
}

Formula emit_anisotropy_membership(unsigned d) {
  if (d != 2) throw Error(ErrorCode::UnsupportedDegree, "only d = 2 is available");
  auto U1 = [](const std::string& v, const std::string& y) {
    return f_and(nonzero(t_var(v)), twist_x(v, y));
  };
  const Formula u1 = f_exists("y", U1("u1", "y"));
  const Term x1 = t_var("x1"), y1 = t_var("y1"), x2 = t_var("x2"), y2 = t_var("y2");
  const Formula u2 = f_exists_all(
      {"x1", "y1", "x2", "y2"},
      f_and_all({U1("x1", "y1"), U1("x2", "y2"),
                 f_eq(t_mul(t_var("u2"), t_mul(x1, x2)), t_add(t_mul(y1, x2), t_mul(y2, x1)))}));
  const Term w = t_var("w");
  const Term slot = t_sub(t_var("t"), t_var("u2"));
  const auto coeffs =
      tensor_terms(pfister_terms(2, {slot, w}), {t_one(), neg(t_var("c"))});
  const Formula core = f_exists("w", f_and(f_eq(t_mul(t_var("u1"), w), t_one()), emit_represents_zero(coeffs, 2)));
  return f_forall_all({"u1", "u2"}, f_implies(f_and(u1, u2), core));
}

Formula emit_algdep_template(unsigned n, unsigned d, const std::string& placeholder) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  if (d != 2 && d != 3) throw Error(ErrorCode::UnsupportedDegree, "d must be 2 or 3");
  std::vector<std::string> bound{"a", "b"};
  std::vector<Formula> members{hole1(placeholder, "a"), hole1(placeholder, "b")};
  std::vector<Term> slots;
  for (unsigned i = 1; i <= n; ++i) {
    const std::string c = "c" + std::to_string(i);
    bound.push_back(c);
    members.push_back(hole1(placeholder, c));
    slots.push_back(t_sub(t_var("t" + std::to_string(i)), t_var(c)));
  }
  slots.push_back(t_var("a"));
  std::vector<Term> second{t_one(), neg(t_var("b"))};
  const auto coeffs = tensor_terms(pfister_terms(d, slots), second);
  return f_forall_all(bound, f_implies(f_and_all(members), emit_represents_zero(coeffs, d)));
}

std::vector<UnaryEntry> unary_catalogue() {
  const std::vector<std::pair<std::string, std::string>> src{
      {"everything", "(= x x)"},
      {"nothing", "(= 0 1)"},
      {"idempotents", "(= (* x x) x)"},
      {"zero", "(= x 0)"},
      {"one", "(= x 1)"},
      {"squares", "(exists y (= (* y y) x))"},
      {"non-squares", "(not (exists y (= (* y y) x)))"},
      {"cubes", "(exists y (= (* y (* y y)) x))"},
      {"doubles", "(exists y (= (+ y y) x))"},
      {"cube-roots-of-x", "(= (* x (* x x)) x)"},
  };
  std::vector<UnaryEntry> out;
  for (const auto& [name, text] : src) out.push_back({name, make_binding({"x"}, parse_formula(text))});
  return out;
}

Formula emit_by_name(const std::string& name) {
  auto numbers = [&](const std::string& prefix) {
    const std::string rest = name.substr(prefix.size());
    const auto dash = rest.find('-');
    if (dash == std::string::npos) throw Error(ErrorCode::InvalidArgument, "expected " + prefix + "N-D");
    return std::pair{parse_uint(rest.substr(0, dash)), parse_uint(rest.substr(dash + 1))};
  };
  if (name.rfind("represents-zero-", 0) == 0) {
    auto [n, d] = numbers("represents-zero-");
    return emit_represents_zero(n, d);
  }
  if (name.rfind("algdep-", 0) == 0) {
    auto [n, d] = numbers("algdep-");
    return emit_algdep_template(n, d);
  }
  if (name == "S") return emit_S_family();
  if (name == "T") return emit_T_family();
  if (name == "A_S") return emit_A_S(emit_S_family());
  if (name == "char0") return emit_char0_sentence();
  if (name == "anisotropy-membership") return emit_anisotropy_membership(2);
  throw Error(ErrorCode::InvalidArgument, "unknown formula '" + name + "'");
}

}  // namespace fgf
