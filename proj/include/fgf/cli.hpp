#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fgf/galois.hpp"

namespace fgf::cli {

inline constexpr int kSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMathFailed = 2;

using Json = nlohmann::ordered_json;

/// Options shared by every subcommand.
struct CommonOptions {
  std::uint64_t seed = 0x5eed;
  unsigned threads = 1;
  std::string output;          // empty: stdout
  std::string format = "json"; // json | csv
  std::uint64_t budget = default_budget();
};

Json to_json(const CommonOptions& o);

/// One run's output. `config` holds every resolved option, the seed
/// included. CSV carries the rows only, a stable subset of `results`.
struct Report {
  std::string command;
  Json config = Json::object();
  std::uint64_t seed = 0;
  bool complete = true;
  bool pass = true;
  std::string error;
  Json results = Json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

Json to_json(const Report& r);
std::string render_json(const Report& r);
std::string render_csv(const Report& r);

/// Writes to a sibling temporary file and renames it into place.
void write_atomic(const std::string& path, const std::string& content);
/// Renders in the chosen format to the output path, or stdout when empty.
void publish(const Report& r, const CommonOptions& o);

std::vector<std::string> split(const std::string& s, char sep);
std::vector<std::uint32_t> parse_uint_list(const std::string& s);
FieldPtr field_from_spec(const std::string& spec, std::uint64_t budget);
std::string read_file(const std::string& path);

struct MersenneConfig {
  std::string field = "5";
  std::string curve;          // empty: first ordinary curve found
  unsigned lmax = 13;
  unsigned psi_bound = 0;     // 0: lmax
  std::uint64_t rho_iterations = std::uint64_t{1} << 22;
};
Report run_mersenne(const MersenneConfig& c, const CommonOptions& o);

struct GenprobConfig {
  std::string field = "5";
  std::string curve;
  std::string ells = "1,2,3";
  std::string method = "lattice";  // lattice | closure
};
Report run_genprob(const GenprobConfig& c, const CommonOptions& o);

struct ZsumConfig {
  std::string qs = "5,7,8,9,11,13,16,17";
  std::uint64_t index_bound = 3;
  std::size_t sample = 8;
};
Report run_zsum(const ZsumConfig& c, const CommonOptions& o);

struct SpringerConfig {
  unsigned d = 2;
  std::string base = "3";
  unsigned degree = 3;
};
Report run_springer(const SpringerConfig& c, const CommonOptions& o);

struct DvrConfig {
  std::string field = "5";
  unsigned d = 2;
  std::string coeffs = "1,-2";
  unsigned levels = 1;
  std::uint64_t trials = 10000;
  std::size_t precision = 8;
};
Report run_dvr(const DvrConfig& c, const CommonOptions& o);

struct CwConfig {
  std::string fields = "2,3,4,5,7,8,9";
};
Report run_cw(const CwConfig& c, const CommonOptions& o);

struct EvalConfig {
  std::string field = "5";
  std::string formula;                // path
  std::vector<std::string> binds;     // NAME=path
  std::vector<std::string> assigns;   // var=literal
  std::uint64_t eval_budget = 10'000'000;
};
/// results.value holds the truth value.
Report run_eval(const EvalConfig& c, const CommonOptions& o);

struct EmitConfig {
  std::string name = "char0";
};
/// results.formula holds the printed s-expression.
Report run_emit(const EmitConfig& c, const CommonOptions& o);

/// The invariant suite at desk scale; results.checks lists each check.
Report run_selftest(const CommonOptions& o);

/// Full command line entry point; returns the exit code.
int main(int argc, char** argv);

}  // namespace fgf::cli
