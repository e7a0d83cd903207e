#include "fgf/sexp.hpp"

#include <cctype>

#include "fgf/error.hpp"

namespace fgf {

void parse_fail(std::size_t offset, const std::string& message) {
  throw Error(ErrorCode::ParseError, "at offset " + std::to_string(offset) + ": " + message);
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  Sexp read() {
    skip_space();
    if (pos_ >= text_.size()) parse_fail(pos_, "unexpected end of input");
    Sexp out;
    out.offset = pos_;
    char c = text_[pos_];
    if (c == ')') parse_fail(pos_, "unexpected ')'");
    if (c == '(') {
      ++pos_;
      out.is_list = true;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) parse_fail(out.offset, "unterminated list");
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        out.items.push_back(read());
      }
      return out;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (d == '(' || d == ')' || d == ';' || std::isspace(static_cast<unsigned char>(d))) break;
      ++pos_;
    }
    out.atom = std::string(text_.substr(start, pos_ - start));
    return out;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Sexp read_sexp(std::string_view text) {
  Reader r(text);
  Sexp s = r.read();
  if (!r.at_end()) parse_fail(r.pos(), "trailing input after expression");
  return s;
}

std::vector<Sexp> read_sexps(std::string_view text) {
  Reader r(text);
  std::vector<Sexp> out;
  while (!r.at_end()) out.push_back(r.read());
  return out;
}

std::string write_sexp(const Sexp& s) {
  if (!s.is_list) return s.atom;
  std::string out = "(";
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    if (i) out += ' ';
    out += write_sexp(s.items[i]);
  }
  out += ')';
  return out;
}

}  // namespace fgf
