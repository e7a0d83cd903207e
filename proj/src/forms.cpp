#include "fgf/forms.hpp"

#include <charconv>
#include <random>

#include "fgf/sexp.hpp"

namespace fgf {

FFForm make_form(const FieldPtr& field, unsigned d, std::vector<Code> coeffs) {
  for (Code c : coeffs)
    if (!field->valid(c)) throw Error(ErrorCode::InvalidArgument, "coefficient is not in " + field->name());
  return FFForm(FiniteFieldDomain{field}, d, std::move(coeffs));
}

FFForm parse_form(const FieldPtr& field, std::string_view text) {
  const Sexp s = read_sexp(text);
  if (!s.is_list || s.items.empty() || !s.items[0].is_atom("form")) parse_fail(s.offset, "expected (form ...)");
  unsigned d = 0;
  std::vector<Code> coeffs;
  bool have_coeffs = false;
  for (std::size_t i = 1; i < s.items.size(); i += 2) {
    if (i + 1 >= s.items.size()) parse_fail(s.items[i].offset, "keyword without value");
    const Sexp& key = s.items[i];
    const Sexp& val = s.items[i + 1];
    if (key.is_atom(":d")) {
      if (val.is_list) parse_fail(val.offset, ":d needs an integer");
      auto [ptr, ec] = std::from_chars(val.atom.data(), val.atom.data() + val.atom.size(), d);
      if (ec != std::errc() || ptr != val.atom.data() + val.atom.size()) parse_fail(val.offset, "bad degree");
    } else if (key.is_atom(":coeffs")) {
      if (!val.is_list) parse_fail(val.offset, ":coeffs needs a list");
      for (const Sexp& c : val.items) coeffs.push_back(field->parse(write_sexp(c)));
      have_coeffs = true;
    } else {
      parse_fail(key.offset, "unknown form keyword");
    }
  }
  if (d == 0 || !have_coeffs) parse_fail(s.offset, "form needs :d and :coeffs");
  return make_form(field, d, std::move(coeffs));
}

FFForm base_change(const FFForm& form, const FieldPtr& extension) {
  if (!extension->has_subfield(*form.domain().field))
    throw Error(ErrorCode::FieldMismatch, form.domain().field->name() + " is not below " + extension->name());
  return make_form(extension, form.degree(), form.coefficients());
}

std::string_view to_string(ZeroStatus s) {
  switch (s) {
    case ZeroStatus::Found: return "found";
    case ZeroStatus::ProvenNone: return "proven_none";
    case ZeroStatus::TrialsExhausted: return "trials_exhausted";
  }
  return "unknown";
}

namespace {

struct Walker {
  const Field& f;
  const std::vector<std::vector<Code>>& terms;  // terms[i][x] = a_i x^d
  std::vector<Code> x;
  std::uint64_t visited = 0;

  // Depth-first in lexicographic order; `nonzero` tracks whether a prefix
  // coordinate is already nonzero.
  bool walk(std::size_t i, Code partial, bool nonzero) {
    const std::uint32_t q = f.order();
    if (i == x.size()) {
      ++visited;
      return nonzero && partial == 0;
    }
    for (Code v = 0; v < q; ++v) {
      x[i] = v;
      if (walk(i + 1, f.add(partial, terms[i][v]), nonzero || v != 0)) return true;
    }
    return false;
  }
};

}  // namespace

ZeroSearchResult find_zero(const FFForm& form, const ZeroSearchOptions& options) {
  const Field& f = *form.domain().field;
  const std::uint32_t q = f.order();
  const std::size_t n = form.size();
  std::vector<std::vector<Code>> terms(n, std::vector<Code>(q));
  for (std::size_t i = 0; i < n; ++i)
    for (Code v = 0; v < q; ++v) terms[i][v] = f.mul(form.coefficients()[i], f.pow(v, form.degree()));

  ZeroSearchResult res;
  if (options.exhaustive) {
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < n; ++i) {
      space *= q;
      if (space > options.budget)
        throw Error(ErrorCode::BudgetExceeded, "q^n exceeds the search budget " + std::to_string(options.budget));
    }
    Walker w{f, terms, std::vector<Code>(n, 0)};
    const bool hit = w.walk(0, 0, false);
    res.visited = w.visited;
    if (hit) {
      res.status = ZeroStatus::Found;
      res.witness = w.x;
    } else {
      res.status = ZeroStatus::ProvenNone;
    }
    return res;
  }
  std::mt19937_64 rng(options.seed);
  std::vector<Code> x(n);
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    bool nonzero = false;
    Code sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<Code>(rng() % q);
      nonzero = nonzero || x[i] != 0;
      sum = f.add(sum, terms[i][x[i]]);
    }
    ++res.visited;
    if (nonzero && sum == 0) {
      res.status = ZeroStatus::Found;
      res.witness = x;
      return res;
    }
  }
  res.status = ZeroStatus::TrialsExhausted;
  return res;
}

SpringerReport springer_experiment(unsigned d, const FieldPtr& base, unsigned extension_degree,
                                   std::uint64_t budget) {
  const bool allowed = (d == 2 && extension_degree % 2 == 1) || (d == 3 && extension_degree == 2);
  if (!allowed)
    throw Error(ErrorCode::InvalidArgument, "descent needs d = 2 with odd degree or d = 3 with degree 2");
  FieldPtr ext = make_extension(base, extension_degree, std::nullopt, budget);
  SpringerReport rep;
  rep.d = d;
  rep.base_order = base->order();
  rep.extension_order = ext->order();
  rep.extension_degree = extension_degree;
  ZeroSearchOptions opt;
  opt.budget = budget;
  for (Code a = 1; a < base->order(); ++a)
    for (Code b = 1; b < base->order(); ++b) {
      SpringerCase c;
      c.coeffs = {a, b};
      const FFForm f = make_form(base, d, c.coeffs);
      c.zero_over_base = find_zero(f, opt).found();
      c.zero_over_extension = find_zero(base_change(f, ext), opt).found();
      c.counterexample = c.zero_over_extension && !c.zero_over_base;
      if (c.counterexample) ++rep.counterexamples;
      rep.cases.push_back(std::move(c));
    }
  rep.pass = rep.counterexamples == 0;
  return rep;
}

unsigned char_rule_degree(const Field& field) { return field.characteristic() == 2 ? 3 : 2; }

CwReport cw_check(const FieldPtr& field, std::uint64_t budget) {
  CwReport rep;
  rep.q = field->order();
  rep.d = char_rule_degree(*field);
  const FiniteFieldDomain dom{field};
  ZeroSearchOptions opt;
  opt.budget = budget;
  for (Code a = 1; a < field->order(); ++a) {
    const FFForm pa = pfister(dom, rep.d, {a});
    for (Code b = 1; b < field->order(); ++b)
      for (Code c = 1; c < field->order(); ++c) {
        ++rep.tuples;
        const FFForm f = tensor(pa, make_form(field, rep.d, {b, c}));
        if (!find_zero(f, opt).found()) rep.failures.push_back({a, b, c});
      }
  }
  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace fgf
