#include "fgf/laurent.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include "fgf/sexp.hpp"

namespace fgf {

LaurentSeries LaurentSeries::constant(FieldPtr field, unsigned depth, Code c) {
  if (!field->valid(c)) throw Error(ErrorCode::InvalidArgument, "constant is not a field element");
  if (depth == 0) {
    LaurentSeries s(std::move(field), 0);
    s.value_ = c;
    return s;
  }
  LaurentSeries s(field, depth);
  if (c != 0) s.coeffs_.push_back(constant(field, depth - 1, c));
  return s;
}

LaurentSeries LaurentSeries::variable(FieldPtr field, unsigned depth, unsigned j) {
  if (j == 0 || j > depth) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  LaurentSeries s(field, depth);
  if (j == depth) {
    s.start_ = 1;
    s.coeffs_.push_back(one(field, depth - 1));
  } else {
    s.coeffs_.push_back(variable(field, depth - 1, j));
  }
  return s;
}

LaurentSeries LaurentSeries::from_coefficients(FieldPtr field, unsigned depth, std::int64_t v,
                                               std::vector<LaurentSeries> coeffs, bool exact) {
  if (depth == 0) throw Error(ErrorCode::InvalidArgument, "depth-0 elements have no coefficients");
  for (const auto& c : coeffs)
    if (c.depth_ != depth - 1 || !c.field_->same_as(*field))
      throw Error(ErrorCode::FieldMismatch, "coefficient lives in the wrong domain");
  LaurentSeries s(std::move(field), depth);
  s.start_ = v;
  s.abs_ = exact ? kExact : v + static_cast<std::int64_t>(coeffs.size());
  s.coeffs_ = std::move(coeffs);
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::zero_mod(FieldPtr field, unsigned depth, std::int64_t abs_precision) {
  if (depth == 0) throw Error(ErrorCode::InvalidArgument, "constants are exact");
  LaurentSeries s(std::move(field), depth);
  s.start_ = abs_precision;
  s.abs_ = abs_precision;
  return s;
}

bool LaurentSeries::is_exact_zero() const noexcept {
  return depth_ == 0 ? value_ == 0 : coeffs_.empty() && abs_ == kExact;
}

bool LaurentSeries::is_zero() const noexcept { return depth_ == 0 ? value_ == 0 : coeffs_.empty(); }

std::int64_t LaurentSeries::valuation() const {
  if (is_zero()) throw Error(ErrorCode::PrecisionExhausted, "valuation of a series not known to be nonzero");
  return depth_ == 0 ? 0 : start_;
}

const LaurentSeries& LaurentSeries::leading_coefficient() const {
  if (depth_ == 0) throw Error(ErrorCode::InvalidArgument, "constants have no leading coefficient");
  if (is_zero()) throw Error(ErrorCode::PrecisionExhausted, "leading coefficient of a zero series");
  return coeffs_.front();
}

LaurentSeries LaurentSeries::coefficient(std::int64_t k) const {
  if (depth_ == 0) throw Error(ErrorCode::InvalidArgument, "constants have no coefficients");
  if (k >= abs_) throw Error(ErrorCode::PrecisionExhausted, "coefficient beyond known precision");
  if (k < start_ || k >= start_ + static_cast<std::int64_t>(coeffs_.size())) return zero(field_, depth_ - 1);
  return coeffs_[static_cast<std::size_t>(k - start_)];
}

Code LaurentSeries::constant_value() const {
  if (depth_ != 0) throw Error(ErrorCode::InvalidArgument, "not a constant");
  return value_;
}

void LaurentSeries::require_compatible(const LaurentSeries& o) const {
  if (depth_ != o.depth_ || !field_->same_as(*o.field_))
    throw Error(ErrorCode::FieldMismatch, "series over different Laurent fields");
}

void LaurentSeries::normalize() {
  if (depth_ == 0) return;
  std::size_t i = 0;
  while (i < coeffs_.size()) {
    const LaurentSeries& c = coeffs_[i];
    if (c.is_exact_zero()) {
      ++i;
      continue;
    }
    if (c.is_zero()) {
      // leading term not certified: keep only what is known
      const std::int64_t cut = start_ + static_cast<std::int64_t>(i);
      abs_ = std::min(abs_, cut);
      start_ = abs_;
      coeffs_.clear();
      return;
    }
    break;
  }
  if (i == coeffs_.size()) {
    coeffs_.clear();
    start_ = abs_ == kExact ? 0 : abs_;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(i));
  start_ += static_cast<std::int64_t>(i);
  if (abs_ == kExact)
    while (coeffs_.back().is_exact_zero()) coeffs_.pop_back();
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  require_compatible(o);
  if (depth_ == 0) return constant(field_, 0, field_->add(value_, o.value_));
  if (is_exact_zero()) return o;
  if (o.is_exact_zero()) return *this;
  const std::int64_t abs = std::min(abs_, o.abs_);
  auto end_of = [](const LaurentSeries& s) { return s.start_ + static_cast<std::int64_t>(s.coeffs_.size()); };
  const std::int64_t lo = std::min(start_, o.start_);
  const std::int64_t hi = abs == kExact ? std::max(end_of(*this), end_of(o)) : abs;
  LaurentSeries r(field_, depth_);
  r.start_ = lo;
  r.abs_ = abs;
  for (std::int64_t k = lo; k < hi; ++k) r.coeffs_.push_back(coefficient(k) + o.coefficient(k));
  if (abs != kExact && lo > abs) r.start_ = abs;
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::operator-() const {
  if (depth_ == 0) return constant(field_, 0, field_->neg(value_));
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  require_compatible(o);
  if (depth_ == 0) return constant(field_, 0, field_->mul(value_, o.value_));
  if (is_exact_zero() || o.is_exact_zero()) return zero(field_, depth_);
  if (is_zero() || o.is_zero()) {
    const std::int64_t a = is_zero() ? abs_ : start_;
    const std::int64_t b = o.is_zero() ? o.abs_ : o.start_;
    return zero_mod(field_, depth_, a + b);
  }
  const std::size_t nx = coeffs_.size(), ny = o.coeffs_.size();
  std::size_t n;
  if (exact() && o.exact()) n = nx + ny - 1;
  else if (exact()) n = ny;
  else if (o.exact()) n = nx;
  else n = std::min(nx, ny);
  LaurentSeries r(field_, depth_);
  r.start_ = start_ + o.start_;
  r.abs_ = exact() && o.exact() ? kExact : r.start_ + static_cast<std::int64_t>(n);
  r.coeffs_.assign(n, zero(field_, depth_ - 1));
  for (std::size_t i = 0; i < nx && i < n; ++i)
    for (std::size_t j = 0; j < ny && i + j < n; ++j) r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::inverse(std::size_t precision) const {
  if (depth_ == 0) return constant(field_, 0, field_->inv(value_));
  if (is_zero()) throw Error(ErrorCode::PrecisionExhausted, "cannot invert a series without a certified leading term");
  if (exact() && coeffs_.size() == 1) {
    LaurentSeries r(field_, depth_);
    r.start_ = -start_;
    r.coeffs_.push_back(coeffs_[0].inverse(precision));
    r.normalize();
    return r;
  }
  const std::size_t n = exact() ? std::max<std::size_t>(precision, 1) : coeffs_.size();
  const LaurentSeries b0 = coeffs_[0].inverse(precision);
  std::vector<LaurentSeries> b{b0};
  for (std::size_t k = 1; k < n; ++k) {
    LaurentSeries acc = zero(field_, depth_ - 1);
    for (std::size_t i = 1; i <= k && i < coeffs_.size(); ++i) acc = acc + coeffs_[i] * b[k - i];
    b.push_back(-(b0 * acc));
  }
  LaurentSeries r(field_, depth_);
  r.start_ = -start_;
  r.abs_ = r.start_ + static_cast<std::int64_t>(n);
  r.coeffs_ = std::move(b);
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::pow(unsigned e) const {
  LaurentSeries r = one(field_, depth_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

LaurentSeries LaurentSeries::shift(std::int64_t k) const {
  if (depth_ == 0) throw Error(ErrorCode::InvalidArgument, "constants cannot be shifted");
  LaurentSeries r = *this;
  if (r.is_exact_zero()) return r;
  r.start_ += k;
  if (r.abs_ != kExact) r.abs_ += k;
  return r;
}

LaurentSeries LaurentSeries::truncate(std::int64_t abs) const {
  if (depth_ == 0) return *this;
  if (abs_ != kExact && abs_ <= abs) return *this;
  LaurentSeries r(field_, depth_);
  r.abs_ = abs;
  r.start_ = std::min(start_, abs);
  for (std::int64_t k = r.start_; k < abs; ++k) r.coeffs_.push_back(coefficient(k));
  if (is_zero()) r.start_ = abs, r.coeffs_.clear();
  r.normalize();
  return r;
}

std::string LaurentSeries::to_string() const {
  if (depth_ == 0) return field_->format(value_);
  std::string out = "(series :v " + std::to_string(start_) + " :coeffs (";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].to_string();
  }
  out += ')';
  if (abs_ != kExact) out += " :prec " + std::to_string(abs_);
  out += ')';
  return out;
}

namespace {

std::int64_t read_int(const Sexp& s) {
  std::int64_t v = 0;
  if (s.is_list) parse_fail(s.offset, "expected an integer");
  auto [ptr, ec] = std::from_chars(s.atom.data(), s.atom.data() + s.atom.size(), v);
  if (ec != std::errc() || ptr != s.atom.data() + s.atom.size()) parse_fail(s.offset, "bad integer '" + s.atom + "'");
  return v;
}

LaurentSeries series_from(const FieldPtr& field, unsigned depth, const Sexp& s) {
  if (depth == 0) return LaurentSeries::constant(field, 0, field->parse(write_sexp(s)));
  if (!s.is_list || s.items.empty() || !s.items[0].is_atom("series")) parse_fail(s.offset, "expected (series ...)");
  std::int64_t v = 0;
  std::optional<std::int64_t> prec;
  const Sexp* coeffs = nullptr;
  for (std::size_t i = 1; i < s.items.size(); i += 2) {
    if (i + 1 >= s.items.size()) parse_fail(s.items[i].offset, "keyword without value");
    const Sexp& key = s.items[i];
    const Sexp& val = s.items[i + 1];
    if (key.is_atom(":v")) v = read_int(val);
    else if (key.is_atom(":prec")) prec = read_int(val);
    else if (key.is_atom(":coeffs")) {
      if (!val.is_list) parse_fail(val.offset, ":coeffs needs a list");
      coeffs = &val;
    } else {
      parse_fail(key.offset, "unknown series keyword");
    }
  }
  if (!coeffs) parse_fail(s.offset, "series without :coeffs");
  std::vector<LaurentSeries> cs;
  for (const Sexp& c : coeffs->items) cs.push_back(series_from(field, depth - 1, c));
  if (!prec) return LaurentSeries::from_coefficients(field, depth, v, std::move(cs), true);
  const std::int64_t end = v + static_cast<std::int64_t>(cs.size());
  if (*prec <= end) return LaurentSeries::from_coefficients(field, depth, v, std::move(cs), true).truncate(*prec);
  while (static_cast<std::int64_t>(cs.size()) + v < *prec) cs.push_back(LaurentSeries::zero(field, depth - 1));
  return LaurentSeries::from_coefficients(field, depth, v, std::move(cs), false);
}

}  // namespace

LaurentSeries parse_series(const FieldPtr& field, unsigned depth, std::string_view text) {
  return series_from(field, depth, read_sexp(text));
}

LaurentSeries random_series(const FieldPtr& field, unsigned depth, std::size_t terms, std::int64_t vmin,
                            std::int64_t vmax, std::mt19937_64& rng) {
  const std::uint32_t q = field->order();
  if (depth == 0) return LaurentSeries::constant(field, 0, static_cast<Code>(1 + rng() % (q - 1)));
  const std::int64_t span = vmax - vmin + 1;
  const std::int64_t v = vmin + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(span));
  std::vector<LaurentSeries> cs;
  cs.push_back(random_series(field, depth - 1, terms, vmin, vmax, rng));
  for (std::size_t i = 1; i < terms; ++i) {
    if (rng() % 3 == 0) cs.push_back(LaurentSeries::zero(field, depth - 1));
    else cs.push_back(random_series(field, depth - 1, terms, vmin, vmax, rng));
  }
  return LaurentSeries::from_coefficients(field, depth, v, std::move(cs), true);
}

}  // namespace fgf
