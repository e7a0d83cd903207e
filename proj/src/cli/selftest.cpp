#include <functional>
#include <random>

#include "fgf/anisotropy.hpp"
#include "fgf/cli.hpp"
#include "fgf/curves.hpp"
#include "fgf/emit.hpp"
#include "fgf/forms.hpp"
#include "fgf/logic.hpp"
#include "fgf/mersenne.hpp"
#include "fgf/modgen.hpp"
#include "fgf/zsum.hpp"

namespace fgf::cli {

namespace {

bool is_prime_power(std::uint32_t q) {
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

struct Check {
  std::string name;
  bool pass = false;
  Json detail = Json::object();
};

std::vector<Curve> fixtures() {
  std::vector<Curve> out{parse_curve_spec(make_prime_field(5), "0,0,0,1,0")};
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 9u}) out.push_back(find_ordinary_curve(make_field_of_order(q)));
  return out;
}

Check field_axioms(std::mt19937_64& rng) {
  Check c{"field-axioms"};
  std::uint64_t trials = 0, failures = 0;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 49u}) {
    const FieldPtr f = make_field_of_order(q);
    for (int i = 0; i < 200; ++i) {
      const Code a = rng() % q, b = rng() % q, x = rng() % q;
      bool ok = f->mul(a, f->add(b, x)) == f->add(f->mul(a, b), f->mul(a, x));
      ok = ok && f->add(a, f->neg(a)) == 0;
      ok = ok && f->mul(f->mul(a, b), x) == f->mul(a, f->mul(b, x));
      if (a != 0) ok = ok && f->mul(a, f->inv(a)) == 1;
      ok = ok && f->pow(a, q) == a;
      ++trials;
      if (!ok) ++failures;
    }
  }
  c.pass = failures == 0;
  c.detail = Json{{"trials", trials}, {"failures", failures}};
  return c;
}

Check extension_counts(const std::vector<Curve>& curves) {
  Check c{"extension-counts"};
  std::uint64_t compared = 0, mismatches = 0;
  for (const auto& e : curves) {
    const FrobeniusData fd = frobenius_trace(e);
    for (unsigned ell = 1; ell <= 3; ++ell) {
      const FieldPtr ext = make_extension(e.field(), ell);
      const std::uint64_t naive = e.base_change(ext).count_points();
      ++compared;
      if (count_over_extension(fd, ell) != naive) ++mismatches;
    }
  }
  c.pass = mismatches == 0;
  c.detail = Json{{"compared", compared}, {"mismatches", mismatches}};
  return c;
}

Check mersenne(const std::vector<Curve>& curves, std::uint64_t seed, unsigned threads) {
  Check c{"mersenne-psi"};
  bool ok = true;
  Json per = Json::array();
  for (const auto& e : curves) {
    const FrobeniusData fd = frobenius_trace(e);
    if (!fd.ordinary) continue;
    ScanOptions so;
    so.threads = threads;
    so.factor.seed = seed;
    const MersenneScan scan = mersenne_scan(fd, 13, so);
    bool integral = true;
    for (const auto& r : scan.rows) integral = integral && r.integral;
    const bool amt = at_most_two_check(scan.rows).pass;
    const PsiSumBoundReport ps = psi_sum_bound_report(scan.rows, 13);
    ok = ok && integral && amt && ps.holds;
    per.push_back(Json{{"curve", e.field()->name() + " " + e.spec()},
                       {"integral", integral},
                       {"at_most_two", amt},
                       {"sum_psi", to_string(ps.sum_psi)},
                       {"twice_psi_product", to_string(ps.twice_psi_product)},
                       {"min_psi_ell", scan.argmin ? scan.rows[*scan.argmin].ell : 0}});
  }
  c.pass = ok;
  c.detail = Json{{"curves", per}};
  return c;
}

Check generation(const std::vector<Curve>& curves) {
  Check c{"generation-bound"};
  std::uint64_t cases = 0;
  Json flagged = Json::array();
  for (const auto& e : curves) {
    const FrobeniusData fd = frobenius_trace(e);
    if (!fd.ordinary) continue;
    std::uint64_t qe = 1;
    for (unsigned ell = 1; ell <= 6; ++ell) {
      qe *= fd.q;
      if (qe > 30000) break;
      const GenerationReport g = generation_fraction(e, ell);
      ++cases;
      if (!g.pass) flagged.push_back(Json{{"curve", e.spec()}, {"q", fd.q}, {"ell", ell}});
    }
  }
  c.pass = flagged.empty();
  c.detail = Json{{"cases", cases}, {"flagged", flagged}};
  return c;
}

Check springer() {
  Check c{"springer-descent"};
  const SpringerReport a = springer_experiment(2, make_prime_field(3), 3);
  const SpringerReport b = springer_experiment(3, make_prime_field(2), 2);
  c.pass = a.pass && b.pass;
  c.detail = Json{{"F_3/F_27", a.counterexamples}, {"F_2/F_4", b.counterexamples}};
  return c;
}

Check chevalley_warning() {
  Check c{"c1-forms"};
  std::uint64_t tuples = 0, failures = 0;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const CwReport r = cw_check(make_field_of_order(q));
    tuples += r.tuples;
    failures += r.failures.size();
  }
  c.pass = failures == 0;
  c.detail = Json{{"tuples", tuples}, {"failures", failures}};
  return c;
}

Check dvr(std::uint64_t seed) {
  Check c{"dvr-anisotropy"};
  const FieldPtr f5 = make_prime_field(5);
  AnisotropyOptions ao;
  ao.seed = seed;
  const auto an = dvr_anisotropy_check(make_form(f5, 2, {1, f5->from_integer(-2)}), ao);
  const auto iso = dvr_anisotropy_check(make_form(f5, 2, {1, 1}), ao);
  c.pass = an.conclusion == Conclusion::Anisotropic && iso.conclusion == Conclusion::Isotropic && iso.witness_checked;
  c.detail = Json{{"anisotropic", to_string(an.conclusion)},
                  {"falsification_witnesses", an.falsification.witnesses},
                  {"class_violations", an.falsification.class_violations},
                  {"control", to_string(iso.conclusion)},
                  {"control_witness", iso.witness}};
  return c;
}

Check represents_zero() {
  Check c{"formula-vs-forms"};
  std::uint64_t forms = 0, disagreements = 0;
  for (std::uint32_t p : {3u, 5u})
  for (unsigned d : {2u, 3u})
    for (std::size_t n = 1; n <= 3; ++n) {
      const FieldPtr f = make_prime_field(p);
      const Formula phi = emit_represents_zero(n, d);
      std::vector<Code> cs(n, 1);
      while (true) {
        Assignment a;
        for (std::size_t i = 0; i < n; ++i) a["c" + std::to_string(i + 1)] = cs[i];
        ++forms;
        if (eval(phi, f, a) != find_zero(make_form(f, d, cs)).found()) ++disagreements;
        std::size_t i = 0;
        while (i < n && cs[i] == p - 1) cs[i++] = 1;
        if (i == n) break;
        ++cs[i];
      }
    }
  c.pass = disagreements == 0;
  c.detail = Json{{"forms", forms}, {"disagreements", disagreements}};
  return c;
}

Check char0(std::mt19937_64& rng) {
  Check c{"char0-sentence"};
  const Formula s = emit_char0_sentence();
  std::vector<Binding> bindings;
  for (auto& e : unary_catalogue()) bindings.push_back(e.binding);
  for (int i = 0; i < 100; ++i) bindings.push_back(make_binding({"x"}, random_formula(rng, {"x"}, 3, 1)));
  std::uint64_t evaluations = 0, exceptions = 0;
  for (std::uint32_t q = 2; q <= 49; ++q) {
    if (!is_prime_power(q)) continue;
    const FieldPtr f = make_field_of_order(q);
    for (const auto& b : bindings) {
      ++evaluations;
      if (eval(s, f, {}, {{"Z_PREDICATE", b}})) ++exceptions;
    }
  }
  c.pass = exceptions == 0;
  c.detail = Json{{"evaluations", evaluations}, {"true_instances", exceptions}};
  return c;
}

Check zsum_fixture() {
  Check c{"zsum-fixture"};
  const Curve e = parse_curve_spec(make_prime_field(5), "0,0,0,1,0");
  const ZSumReport r = zsum_report(e, 1);
  c.pass = r.sums == std::vector<Code>{0} && r.missing == std::vector<Code>{1, 2, 3, 4};
  c.detail = Json{{"sums", r.sums}, {"missing", r.missing}};
  return c;
}

Check round_trip(std::mt19937_64& rng) {
  Check c{"parse-print"};
  std::uint64_t failures = 0;
  for (int i = 0; i < 200; ++i) {
    const Formula f = random_formula(rng, {"x", "y"}, 4, 2);
    const std::string text = print(f);
    const Formula g = parse_formula(text);
    if (!equal(f, g) || print(g) != text) ++failures;
  }
  c.pass = failures == 0;
  c.detail = Json{{"formulas", 200}, {"failures", failures}};
  return c;
}

Check duality(std::mt19937_64& rng) {
  Check c{"negation-duality"};
  std::uint64_t failures = 0;
  const FieldPtr f = make_prime_field(3);
  for (int i = 0; i < 200; ++i) {
    const Formula phi = random_formula(rng, {"x"}, 3, 1);
    const Assignment a{{"x", static_cast<Code>(rng() % 3)}};
    const bool lhs = eval(f_not(f_exists("x", phi)), f, a);
    const bool rhs = eval(f_forall("x", f_not(phi)), f, a);
    const bool dn = eval(f_not(f_not(phi)), f, a) == eval(phi, f, a);
    if (lhs != rhs || !dn) ++failures;
  }
  c.pass = failures == 0;
  c.detail = Json{{"formulas", 200}, {"failures", failures}};
  return c;
}

}  // namespace

Report run_selftest(const CommonOptions& o) {
  Report r;
  r.command = "selftest";
  r.seed = o.seed;
  r.config = to_json(o);
  r.csv_header = {"check", "pass"};
  std::mt19937_64 rng(o.seed);
  const auto curves = fixtures();
  std::vector<std::function<Check()>> suite{
      [&] { return field_axioms(rng); },
      [&] { return extension_counts(curves); },
      [&] { return mersenne(curves, o.seed, o.threads); },
      [&] { return generation(curves); },
      [] { return springer(); },
      [] { return chevalley_warning(); },
      [&] { return dvr(o.seed); },
      [] { return represents_zero(); },
      [&] { return char0(rng); },
      [] { return zsum_fixture(); },
      [&] { return round_trip(rng); },
      [&] { return duality(rng); },
  };
  Json checks = Json::array();
  for (auto& run : suite) {
    Check c;
    try {
      c = run();
    } catch (const Error& e) {
      r.complete = false;
      r.error = e.what();
      break;
    }
    r.pass = r.pass && c.pass;
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    r.csv_rows.push_back({c.name, c.pass ? "true" : "false"});
  }
  if (!r.complete) r.pass = false;
  r.results["checks"] = checks;
  return r;
}

}  // namespace fgf::cli
