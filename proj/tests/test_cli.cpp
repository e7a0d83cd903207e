#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "fgf/cli.hpp"

using namespace fgf;
using namespace fgf::cli;

namespace {

namespace fs = std::filesystem;

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "fgf");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  argv.push_back(nullptr);
  return fgf::cli::main(static_cast<int>(args.size()), argv.data());
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "fgf_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Cli, ReportCarriesConfigAndSeed) {
  CommonOptions o;
  o.seed = 99;
  MersenneConfig c;
  c.lmax = 5;
  const Report r = run_mersenne(c, o);
  const Json j = to_json(r);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["command"], "mersenne");
  EXPECT_EQ(j["seed"], 99u);
  EXPECT_EQ(j["config"]["seed"], 99u);
  EXPECT_EQ(j["config"]["lmax"], 5u);
  EXPECT_EQ(j["config"]["field"], "5");
  EXPECT_TRUE(j["complete"].get<bool>());
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["results"]["rows"].size(), 3u);  // ell = 2, 3, 5
  EXPECT_EQ(render_json(r), render_json(run_mersenne(c, o)));
}

TEST(Cli, CsvIsSubsetOfRows) {
  MersenneConfig c;
  c.field = "7";
  c.lmax = 7;
  const Report r = run_mersenne(c, {});
  const std::string csv = render_csv(r);
  const auto lines = split(csv.substr(0, csv.size() - 1), '\n');
  ASSERT_EQ(lines.size(), 1 + r.results["rows"].size());
  EXPECT_EQ(lines[0], "ell,count,e_ell,integral,factors,complete,psi");
  for (std::size_t i = 0; i < r.results["rows"].size(); ++i) {
    const Json& row = r.results["rows"][i];
    EXPECT_EQ(split(lines[i + 1], ',')[0], std::to_string(row["ell"].get<unsigned>()));
  }
}

TEST(Cli, SpringerAndCw) {
  SpringerConfig s;
  s.d = 2;
  s.base = "3";
  s.degree = 3;
  const Report r = run_springer(s, {});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.results["forms"], 4u);
  EXPECT_EQ(r.results["counterexamples"], 0u);

  CwConfig c;
  c.fields = "2,3,4";
  const Report w = run_cw(c, {});
  EXPECT_TRUE(w.pass);
  EXPECT_EQ(w.results["fields"].size(), 3u);

  s.degree = 2;
  const Report bad = run_springer(s, {});
  EXPECT_FALSE(bad.complete);
  EXPECT_FALSE(bad.error.empty());
}

TEST(Cli, DvrCertificate) {
  DvrConfig c;
  c.trials = 200;
  c.precision = 4;
  const Report r = run_dvr(c, {});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.results["conclusion"], "anisotropic");
  EXPECT_EQ(r.results["falsification"]["witnesses"], 0u);
  c.coeffs = "1,1";  // -1 is a square mod 5
  const Report iso = run_dvr(c, {});
  EXPECT_EQ(iso.results["conclusion"], "isotropic");
  EXPECT_TRUE(iso.results["witness_checked"].get<bool>());
}

TEST(Cli, ZsumAndGenprob) {
  ZsumConfig z;
  z.qs = "5";
  z.sample = 2;
  const Report zr = run_zsum(z, {});
  EXPECT_TRUE(zr.complete);
  GenprobConfig g;
  g.ells = "1,2";
  const Report gr = run_genprob(g, {});
  EXPECT_TRUE(gr.complete);
  EXPECT_EQ(gr.results["rows"].size(), 2u);
}

TEST(Cli, EvalAndEmit) {
  const fs::path f = scratch("sqrt2.sexp");
  write(f, "(exists x (= (* x x) (+ 1 1)))");
  EvalConfig e;
  e.formula = f.string();
  e.field = "7";
  EXPECT_TRUE(run_eval(e, {}).results["value"].get<bool>());
  e.field = "5";
  EXPECT_FALSE(run_eval(e, {}).results["value"].get<bool>());

  EmitConfig m;
  m.name = "represents-zero-2-2";
  const Report r = run_emit(m, {});
  EXPECT_EQ(r.results["exists"], 2u);
  EXPECT_EQ(r.results["free_variables"], (Json{"c1", "c2"}));
  m.name = "bogus";
  EXPECT_FALSE(run_emit(m, {}).complete);
}

TEST(Cli, ExitCodes) {
  const fs::path out = scratch("springer.json");
  fs::remove(out);
  EXPECT_EQ(run({"springer", "--d", "2", "--base", "3", "--degree", "3", "-o", out.string()}), kExitOk);
  const Json j = Json::parse(read_file(out.string()));
  EXPECT_EQ(j["command"], "springer");
  EXPECT_EQ(run({"springer", "--d", "2", "--base", "3", "--degree", "2", "-o", out.string()}), kExitUsage);
  EXPECT_EQ(run({"nonsense"}), kExitUsage);
  EXPECT_EQ(run({"springer", "--format", "xml"}), kExitUsage);

  const fs::path phi = scratch("hole.sexp");
  write(phi, "(forall x (hole P x))");
  EXPECT_EQ(run({"eval-formula", "--field", "5", "--formula", phi.string()}), kExitUsage);
  const fs::path bind = scratch("bind.sexp");
  write(bind, "(lambda (v) (= v v))");
  EXPECT_EQ(run({"eval-formula", "--field", "5", "--formula", phi.string(), "--bind", "P=" + bind.string()}),
            kExitOk);

  // a form with a nontrivial zero fails the anisotropy claim but is not an error
  const fs::path dvr = scratch("dvr.csv");
  EXPECT_EQ(run({"dvr", "--field", "5", "--coeffs", "1,1", "--trials", "10", "--format", "csv", "-o",
                 dvr.string()}),
            kExitOk);
  EXPECT_EQ(read_file(dvr.string()).substr(0, 24), "level,kind,checked,claim");
}

TEST(Cli, EmitWritesFormula) {
  const fs::path out = scratch("char0.sexp");
  fs::remove(out);
  EXPECT_EQ(run({"emit", "--name", "char0", "-o", out.string()}), kExitOk);
  const std::string text = read_file(out.string());
  EXPECT_EQ(text.substr(0, 4), "(and");
  EXPECT_EQ(text.back(), '\n');
}

TEST(Cli, FieldSpecs) {
  EXPECT_EQ(field_from_spec("9", default_budget())->order(), 9u);
  EXPECT_EQ(field_from_spec("9", default_budget())->degree(), 2u);
  EXPECT_EQ(field_from_spec("2^2^2", default_budget())->order(), 16u);
  EXPECT_EQ(parse_uint_list("1,2,3"), (std::vector<std::uint32_t>{1, 2, 3}));
  EXPECT_THROW(field_from_spec("6", default_budget()), Error);
}

TEST(Cli, SelftestDeterministic) {
  CommonOptions o;
  o.seed = 7;
  const Report a = run_selftest(o);
  EXPECT_TRUE(a.complete);
  EXPECT_TRUE(a.pass) << render_json(a);
  EXPECT_EQ(render_json(a), render_json(run_selftest(o)));
  EXPECT_EQ(a.results["checks"].size(), 12u);
}
