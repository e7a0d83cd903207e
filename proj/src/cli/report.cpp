#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "fgf/cli.hpp"

namespace fgf::cli {

Json to_json(const Report& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = r.command;
  j["config"] = r.config;
  j["seed"] = r.seed;
  j["complete"] = r.complete;
  j["pass"] = r.pass;
  if (!r.error.empty()) j["error"] = r.error;
  j["results"] = r.results;
  return j;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_line(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  out += '\n';
}

}  // namespace

std::string render_csv(const Report& r) {
  std::string out;
  csv_line(out, r.csv_header);
  for (const auto& row : r.csv_rows) csv_line(out, row);
  return out;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::InvalidArgument, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

void publish(const Report& r, const CommonOptions& o) {
  const std::string text = o.format == "csv" ? render_csv(r) : render_json(r);
  if (o.output.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    write_atomic(o.output, text);
  }
}

}  // namespace fgf::cli
