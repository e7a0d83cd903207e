#include <iostream>

#include <CLI11.hpp>

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

Report start(const std::string& command, const CommonOptions& o) {
  Report r;
  r.command = command;
  r.seed = o.seed;
  r.config = to_json(o);
  return r;
}

// Runs `body`; a library error leaves the partial report marked incomplete.
template <class F>
void guarded(Report& r, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    r.complete = false;
    r.pass = false;
    r.error = e.what();
  }
}

std::string str(const mpz_class& v) { return v.get_str(); }

Json factors_json(const Factorization& f) {
  Json out = Json::array();
  for (const auto& pp : f) out.push_back(Json{{"prime", str(pp.prime)}, {"exponent", pp.exponent}, {"probable", pp.probable}});
  return out;
}

std::string factors_text(const Factorization& f) {
  std::string out;
  for (const auto& pp : f) {
    if (!out.empty()) out += " * ";
    out += str(pp.prime);
    if (pp.exponent > 1) out += "^" + std::to_string(pp.exponent);
  }
  return out.empty() ? "1" : out;
}

std::string codes_text(const Field& f, const std::vector<Code>& cs) {
  std::string out;
  for (Code c : cs) out += (out.empty() ? "" : " ") + f.format(c);
  return out;
}

Json codes_json(const Field& f, const std::vector<Code>& cs) {
  Json out = Json::array();
  for (Code c : cs) out.push_back(f.format(c));
  return out;
}

Curve curve_for(const FieldPtr& field, const std::string& spec) {
  return spec.empty() ? find_ordinary_curve(field) : parse_curve_spec(field, spec);
}

}  // namespace

Report run_mersenne(const MersenneConfig& c, const CommonOptions& o) {
  Report r = start("mersenne", o);
  const unsigned bound = c.psi_bound ? c.psi_bound : c.lmax;
  r.config["field"] = c.field;
  r.config["curve"] = c.curve;
  r.config["lmax"] = c.lmax;
  r.config["psi_bound"] = bound;
  r.config["rho_iterations"] = c.rho_iterations;
  r.csv_header = {"ell", "count", "e_ell", "integral", "factors", "complete", "psi"};
  guarded(r, [&] {
    const FieldPtr field = field_from_spec(c.field, o.budget);
    const Curve curve = curve_for(field, c.curve);
    const FrobeniusData fd = frobenius_trace(curve, o.budget);
    r.results["curve"] = curve.spec();
    r.results["q"] = fd.q;
    r.results["n1"] = fd.n1;
    r.results["trace"] = fd.t;
    r.results["ordinary"] = fd.ordinary;
    ScanOptions so;
    so.threads = o.threads;
    so.factor.rho_iterations = c.rho_iterations;
    so.factor.seed = o.seed;
    const MersenneScan scan = mersenne_scan(fd, c.lmax, so);
    Json rows = Json::array();
    bool integral = true;
    for (const auto& row : scan.rows) {
      integral = integral && row.integral;
      rows.push_back(Json{{"ell", row.ell},
                          {"count", str(row.count)},
                          {"e_ell", str(row.e_ell)},
                          {"integral", row.integral},
                          {"factors", factors_json(row.factors)},
                          {"unfactored", str(row.unfactored)},
                          {"complete", row.complete},
                          {"psi", row.complete ? to_string(row.psi) : ""}});
      r.csv_rows.push_back({std::to_string(row.ell), str(row.count), str(row.e_ell), row.integral ? "true" : "false",
                            factors_text(row.factors), row.complete ? "true" : "false",
                            row.complete ? to_string(row.psi) : ""});
    }
    r.results["rows"] = rows;
    r.results["all_integral"] = integral;
    if (scan.argmin) {
      const auto& m = scan.rows[*scan.argmin];
      r.results["min_psi"] = Json{{"ell", m.ell}, {"psi", to_string(m.psi)}};
    }
    r.pass = integral;
    const AtMostTwoReport amt = at_most_two_check(scan.rows);
    Json off = Json::array();
    for (const auto& [p, ells] : amt.offending) off.push_back(Json{{"prime", str(p)}, {"ells", ells}});
    r.results["at_most_two"] = Json{{"pass", amt.pass}, {"primes_seen", amt.primes_seen}, {"offending", off}};
    r.pass = r.pass && amt.pass;
    const PsiSumBoundReport ps = psi_sum_bound_report(scan.rows, bound);
    r.results["psi_sum_bound"] = Json{{"bound", ps.bound},
                                      {"sum_psi", to_string(ps.sum_psi)},
                                      {"psi_product", to_string(ps.psi_product)},
                                      {"twice_psi_product", to_string(ps.twice_psi_product)},
                                      {"holds", ps.holds}};
    r.pass = r.pass && ps.holds;
  });
  return r;
}

Report run_genprob(const GenprobConfig& c, const CommonOptions& o) {
  Report r = start("genprob", o);
  r.config["field"] = c.field;
  r.config["curve"] = c.curve;
  r.config["ells"] = c.ells;
  r.config["method"] = c.method;
  r.csv_header = {"ell", "n", "psi", "ring", "generating", "generating_frobenius", "total", "fraction", "bound", "pass",
                  "end_ring_caveat"};
  guarded(r, [&] {
    if (c.method != "lattice" && c.method != "closure")
      throw Error(ErrorCode::InvalidArgument, "method must be lattice or closure");
    const auto method = c.method == "lattice" ? GenerationMethod::Lattice : GenerationMethod::Closure;
    const FieldPtr field = field_from_spec(c.field, o.budget);
    const Curve curve = curve_for(field, c.curve);
    r.results["curve"] = curve.spec();
    r.results["rows"] = Json::array();
    Json flagged = Json::array();
    for (unsigned ell : parse_uint_list(c.ells)) {
      const GenerationReport g = generation_fraction(curve, ell, method, o.budget);
      r.results["rows"].push_back(Json{{"ell", g.ell},
                                       {"n", str(g.n)},
                                       {"psi", to_string(g.psi)},
                                       {"ring", g.ring},
                                       {"group", Json::array({g.n1, g.n2})},
                                       {"generating", g.generating},
                                       {"generating_frobenius", g.generating_frobenius},
                                       {"total", g.total},
                                       {"fraction", g.fraction.get_str()},
                                       {"bound", g.bound.get_str()},
                                       {"pass", g.pass},
                                       {"end_ring_caveat", g.end_ring_caveat}});
      r.csv_rows.push_back({std::to_string(g.ell), str(g.n), to_string(g.psi), g.ring, std::to_string(g.generating),
                            std::to_string(g.generating_frobenius), std::to_string(g.total), g.fraction.get_str(),
                            g.bound.get_str(), g.pass ? "true" : "false", g.end_ring_caveat ? "true" : "false"});
      if (!g.pass) flagged.push_back(g.ell);
      r.pass = r.pass && g.pass;
    }
    r.results["flagged"] = flagged;
  });
  return r;
}

Report run_zsum(const ZsumConfig& c, const CommonOptions& o) {
  Report r = start("zsum", o);
  r.config["qs"] = c.qs;
  r.config["index_bound"] = c.index_bound;
  r.config["sample"] = c.sample;
  r.csv_header = {"q", "curve", "group_order", "multiplier", "index", "subgroup_order", "sums", "missing", "covered"};
  guarded(r, [&] {
    ZSumOptions zo;
    zo.sample_size = c.sample;
    zo.threads = o.threads;
    zo.budget = o.budget;
    std::vector<ZSumReport> all;
    Json rows = Json::array();
    for (std::uint32_t q : parse_uint_list(c.qs)) {
      const FieldPtr field = make_field_of_order(q, o.budget);
      for (auto& z : zsum_scan(field, c.index_bound, zo)) {
        rows.push_back(Json{{"q", z.q},
                            {"curve", z.curve},
                            {"group_order", z.group_order},
                            {"multiplier", z.multiplier},
                            {"index", z.index},
                            {"subgroup_order", z.subgroup_order},
                            {"sums", codes_json(*field, z.sums)},
                            {"missing", codes_json(*field, z.missing)},
                            {"covered", z.covered},
                            {"empty_after_poles", z.empty_after_poles}});
        r.csv_rows.push_back({std::to_string(z.q), z.curve, std::to_string(z.group_order), std::to_string(z.multiplier),
                              std::to_string(z.index), std::to_string(z.subgroup_order),
                              std::to_string(z.sums.size()), codes_text(*field, z.missing),
                              z.covered ? "true" : "false"});
        all.push_back(std::move(z));
      }
    }
    r.results["reports"] = rows;
    const ZSumSummary s = summarize(all);
    Json per = Json::array();
    for (const auto& f : s.fields)
      per.push_back(Json{{"q", f.q}, {"curves", f.curves}, {"covered_full_group", f.covered_full_group}});
    Json first = Json::array();
    for (const auto& v : s.first_covering) first.push_back(v ? Json(*v) : Json(nullptr));
    r.results["summary"] = Json{{"fields", per}, {"first_covering_by_index", first}};
  });
  return r;
}

Report run_springer(const SpringerConfig& c, const CommonOptions& o) {
  Report r = start("springer", o);
  r.config["d"] = c.d;
  r.config["base"] = c.base;
  r.config["degree"] = c.degree;
  r.csv_header = {"coeffs", "zero_over_base", "zero_over_extension", "counterexample"};
  guarded(r, [&] {
    const FieldPtr base = field_from_spec(c.base, o.budget);
    const SpringerReport s = springer_experiment(c.d, base, c.degree, o.budget);
    Json cases = Json::array();
    for (const auto& k : s.cases) {
      cases.push_back(Json{{"coeffs", codes_json(*base, k.coeffs)},
                           {"zero_over_base", k.zero_over_base},
                           {"zero_over_extension", k.zero_over_extension},
                           {"counterexample", k.counterexample}});
      r.csv_rows.push_back({codes_text(*base, k.coeffs), k.zero_over_base ? "true" : "false",
                            k.zero_over_extension ? "true" : "false", k.counterexample ? "true" : "false"});
    }
    r.results = Json{{"d", s.d},
                     {"base_order", s.base_order},
                     {"extension_order", s.extension_order},
                     {"extension_degree", s.extension_degree},
                     {"forms", s.cases.size()},
                     {"counterexamples", s.counterexamples},
                     {"cases", cases}};
    r.pass = s.pass;
  });
  return r;
}

Report run_dvr(const DvrConfig& c, const CommonOptions& o) {
  Report r = start("dvr", o);
  r.config["field"] = c.field;
  r.config["d"] = c.d;
  r.config["coeffs"] = c.coeffs;
  r.config["levels"] = c.levels;
  r.config["trials"] = c.trials;
  r.config["precision"] = c.precision;
  r.csv_header = {"level", "kind", "checked", "claim"};
  guarded(r, [&] {
    const FieldPtr field = field_from_spec(c.field, o.budget);
    std::vector<Code> coeffs;
    for (const auto& s : split(c.coeffs, ',')) coeffs.push_back(field->parse(s));
    const FFForm residue = make_form(field, c.d, coeffs);
    AnisotropyOptions ao;
    ao.trials = c.trials;
    ao.seed = o.seed;
    ao.precision = c.precision;
    ao.budget = o.budget;
    const AnisotropyCertificate cert = local_params_anisotropy(residue, c.levels, ao);
    Json trace = Json::array();
    for (const auto& st : cert.trace) {
      trace.push_back(Json{{"level", st.level}, {"kind", st.kind}, {"claim", st.claim}, {"checked", st.checked}});
      r.csv_rows.push_back({std::to_string(st.level), st.kind, st.checked ? "true" : "false", st.claim});
    }
    const Falsification& f = cert.falsification;
    r.results = Json{{"conclusion", to_string(cert.conclusion)},
                     {"d", cert.d},
                     {"levels", cert.levels},
                     {"residue_form", cert.residue_form},
                     {"form", cert.form},
                     {"trace", trace},
                     {"witness", cert.witness},
                     {"witness_checked", cert.witness_checked},
                     {"falsification", Json{{"trials", f.trials},
                                            {"seed", f.seed},
                                            {"precision", f.precision},
                                            {"witnesses", f.witnesses},
                                            {"class_checks", f.class_checks},
                                            {"class_violations", f.class_violations}}}};
    r.pass = cert.conclusion == Conclusion::Anisotropic ||
             (cert.conclusion == Conclusion::Isotropic && cert.witness_checked);
  });
  return r;
}

Report run_cw(const CwConfig& c, const CommonOptions& o) {
  Report r = start("cw", o);
  r.config["fields"] = c.fields;
  r.csv_header = {"q", "d", "tuples", "failures", "pass"};
  guarded(r, [&] {
    Json rows = Json::array();
    for (const auto& spec : split(c.fields, ',')) {
      const FieldPtr field = field_from_spec(spec, o.budget);
      const CwReport cw = cw_check(field, o.budget);
      Json fails = Json::array();
      for (const auto& t : cw.failures) fails.push_back(codes_json(*field, t));
      rows.push_back(Json{{"q", cw.q}, {"d", cw.d}, {"tuples", cw.tuples}, {"failures", fails}, {"pass", cw.pass}});
      r.csv_rows.push_back({std::to_string(cw.q), std::to_string(cw.d), std::to_string(cw.tuples),
                            std::to_string(cw.failures.size()), cw.pass ? "true" : "false"});
      r.pass = r.pass && cw.pass;
    }
    r.results["fields"] = rows;
  });
  return r;
}

Report run_eval(const EvalConfig& c, const CommonOptions& o) {
  Report r = start("eval-formula", o);
  r.config["field"] = c.field;
  r.config["formula"] = c.formula;
  r.config["bind"] = c.binds;
  r.config["assign"] = c.assigns;
  r.config["eval_budget"] = c.eval_budget;
  r.csv_header = {"value", "visits"};
  guarded(r, [&] {
    const FieldPtr field = field_from_spec(c.field, o.budget);
    const Formula f = parse_formula(read_file(c.formula));
    Bindings bindings;
    for (const auto& b : c.binds) {
      const auto eq = b.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "--bind expects NAME=file");
      bindings[b.substr(0, eq)] = parse_binding(read_file(b.substr(eq + 1)));
    }
    Assignment assignment;
    for (const auto& a : c.assigns) {
      const auto eq = a.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::InvalidArgument, "--assign expects var=value");
      assignment[a.substr(0, eq)] = field->parse(a.substr(eq + 1));
    }
    EvalStats stats;
    const bool value = eval(f, field, assignment, bindings, EvalOptions{c.eval_budget}, &stats);
    r.results = Json{{"value", value}, {"visits", stats.visits}};
    r.csv_rows.push_back({value ? "true" : "false", std::to_string(stats.visits)});
  });
  return r;
}

Report run_emit(const EmitConfig& c, const CommonOptions& o) {
  Report r = start("emit", o);
  r.config["name"] = c.name;
  r.csv_header = {"name", "formula"};
  guarded(r, [&] {
    const Formula f = emit_by_name(c.name);
    const QuantifierCount qc = count_quantifiers(f);
    Json holes = Json::object();
    for (const auto& [name, arity] : placeholders(f)) holes[name] = arity;
    const auto fv = free_variables(f);
    r.results = Json{{"formula", print(f)},
                     {"free_variables", std::vector<std::string>(fv.begin(), fv.end())},
                     {"placeholders", holes},
                     {"exists", qc.exists},
                     {"forall", qc.forall}};
    r.csv_rows.push_back({c.name, print(f)});
  });
  return r;
}

namespace {

int exit_code(const Report& r) {
  if (!r.complete) return kExitUsage;
  return r.pass ? kExitOk : kExitMathFailed;
}

void add_common(CLI::App* app, CommonOptions& o) {
  app->add_option("--seed", o.seed, "64-bit seed for every randomized step")->capture_default_str();
  app->add_option("--threads", o.threads, "worker threads; results are merged in order")->capture_default_str();
  app->add_option("--output,-o", o.output, "report path (stdout when omitted)");
  app->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app->add_option("--budget", o.budget, "enumeration budget (FGF_BUDGET overrides the default)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-field experiments: curve counts, forms, formulas"};
  app.require_subcommand(1);
  CommonOptions common;

  MersenneConfig mc;
  auto* mersenne = app.add_subcommand("mersenne", "Psi statistics of e_ell = #E(F_{q^ell}) / #E(F_q)");
  mersenne->add_option("--field", mc.field, "field spec: q, p^k or p^k1^k2")->capture_default_str();
  mersenne->add_option("--curve", mc.curve, "a1,a2,a3,a4,a6 (default: first ordinary curve)");
  mersenne->add_option("--lmax", mc.lmax, "largest prime ell")->capture_default_str();
  mersenne->add_option("--psi-bound", mc.psi_bound, "B for the Psi sum bound (0: lmax)")->capture_default_str();
  mersenne->add_option("--rho-iterations", mc.rho_iterations, "Pollard rho budget per cofactor")->capture_default_str();
  add_common(mersenne, common);

  GenprobConfig gc;
  auto* genprob = app.add_subcommand("genprob", "exhaustive generation fraction against 1 - 2 Psi(n)");
  genprob->add_option("--field", gc.field, "field spec")->capture_default_str();
  genprob->add_option("--curve", gc.curve, "a1,a2,a3,a4,a6 (default: first ordinary curve)");
  genprob->add_option("--ell", gc.ells, "comma-separated extension degrees")->capture_default_str();
  genprob->add_option("--method", gc.method, "lattice or closure")->capture_default_str();
  add_common(genprob, common);

  ZsumConfig zc;
  auto* zsum = app.add_subcommand("zsum", "coverage of F_q by sums of two z-coordinates");
  zsum->add_option("--q", zc.qs, "comma-separated field orders")->capture_default_str();
  zsum->add_option("--index-bound", zc.index_bound, "largest subgroup index")->capture_default_str();
  zsum->add_option("--sample", zc.sample, "curves per field")->capture_default_str();
  add_common(zsum, common);

  SpringerConfig sc;
  auto* springer = app.add_subcommand("springer", "descent of zeros of <a, b>_d through an extension");
  springer->add_option("--d", sc.d, "form degree")->capture_default_str();
  springer->add_option("--base", sc.base, "base field spec")->capture_default_str();
  springer->add_option("--degree", sc.degree, "extension degree")->capture_default_str();
  add_common(springer, common);

  DvrConfig dc;
  auto* dvr = app.add_subcommand("dvr", "anisotropy certificate over k((t_1))...((t_m))");
  dvr->add_option("--field", dc.field, "residue field spec")->capture_default_str();
  dvr->add_option("--d", dc.d, "form degree")->capture_default_str();
  dvr->add_option("--coeffs", dc.coeffs, "comma-separated residue coefficients")->capture_default_str();
  dvr->add_option("--levels", dc.levels, "number of local parameters")->capture_default_str();
  dvr->add_option("--trials", dc.trials, "falsification trials")->capture_default_str();
  dvr->add_option("--precision", dc.precision, "terms per Laurent level")->capture_default_str();
  add_common(dvr, common);

  CwConfig cc;
  auto* cw = app.add_subcommand("cw", "zeros of <<a>>_d tensor <b, c> over small fields");
  cw->add_option("--fields", cc.fields, "comma-separated field specs")->capture_default_str();
  add_common(cw, common);

  EvalConfig ec;
  auto* evalc = app.add_subcommand("eval-formula", "evaluate a formula over a finite field");
  evalc->add_option("--field", ec.field, "field spec")->capture_default_str();
  evalc->add_option("--formula", ec.formula, "s-expression file")->required();
  evalc->add_option("--bind", ec.binds, "NAME=file binding for a placeholder");
  evalc->add_option("--assign", ec.assigns, "var=value for a free variable");
  evalc->add_option("--eval-budget", ec.eval_budget, "quantifier visits allowed")->capture_default_str();
  add_common(evalc, common);

  EmitConfig emc;
  auto* emitc = app.add_subcommand("emit", "print a constructed formula");
  emitc->add_option("--name", emc.name,
                    "represents-zero-N-D, S, T, A_S, char0, anisotropy-membership, algdep-N-D")
      ->capture_default_str();
  add_common(emitc, common);

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
  add_common(selftest, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Report r;
    if (*mersenne) r = run_mersenne(mc, common);
    else if (*genprob) r = run_genprob(gc, common);
    else if (*zsum) r = run_zsum(zc, common);
    else if (*springer) r = run_springer(sc, common);
    else if (*dvr) r = run_dvr(dc, common);
    else if (*cw) r = run_cw(cc, common);
    else if (*evalc) r = run_eval(ec, common);
    else if (*emitc) r = run_emit(emc, common);
    else r = run_selftest(common);

    if (*evalc && common.output.empty()) {
      if (!r.complete) {
        std::cerr << r.error << "\n";
        return kExitUsage;
      }
      std::cout << (r.results["value"].get<bool>() ? "true" : "false") << "\n";
      return kExitOk;
    }
    if (*emitc && r.complete) {
      const std::string text = r.results["formula"].get<std::string>() + "\n";
      if (common.output.empty()) std::cout << text;
      else write_atomic(common.output, text);
      return kExitOk;
    }
    publish(r, common);
    if (!r.complete) std::cerr << r.error << "\n";
    if (!r.pass && r.complete) std::cerr << r.command << ": mathematical check failed\n";
    return exit_code(r);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace fgf::cli
