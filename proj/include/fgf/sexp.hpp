#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fgf {

/// Minimal s-expression tree shared by the element, form, series and formula
/// readers. Atoms keep their source offset for error reporting.
struct Sexp {
  bool is_list = false;
  std::string atom;
  std::vector<Sexp> items;
  std::size_t offset = 0;

  bool is_atom(std::string_view text) const { return !is_list && atom == text; }
};

/// Reads exactly one expression; trailing non-whitespace is a ParseError.
Sexp read_sexp(std::string_view text);

/// Reads a sequence of expressions (possibly empty).
std::vector<Sexp> read_sexps(std::string_view text);

std::string write_sexp(const Sexp& s);

/// Throws ParseError naming the offset.
[[noreturn]] void parse_fail(std::size_t offset, const std::string& message);

}  // namespace fgf
