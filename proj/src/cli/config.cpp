#include <charconv>
#include <fstream>
#include <sstream>

#include "fgf/cli.hpp"

namespace fgf::cli {

Json to_json(const CommonOptions& o) {
  return Json{{"seed", o.seed}, {"threads", o.threads}, {"format", o.format}, {"budget", o.budget}};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    out.push_back(s.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::uint32_t> parse_uint_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  for (const auto& part : split(s, ',')) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw Error(ErrorCode::ParseError, "bad integer '" + part + "' in list '" + s + "'");
    out.push_back(v);
  }
  return out;
}

FieldPtr field_from_spec(const std::string& spec, std::uint64_t budget) {
  // a bare prime power q names the flat field F_q
  if (spec.find('^') == std::string::npos) {
    std::uint32_t q = 0;
    auto [ptr, ec] = std::from_chars(spec.data(), spec.data() + spec.size(), q);
    if (ec != std::errc() || ptr != spec.data() + spec.size())
      throw Error(ErrorCode::ParseError, "bad field spec '" + spec + "'");
    return make_field_of_order(q, budget);
  }
  return parse_field_spec(spec, budget);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fgf::cli
