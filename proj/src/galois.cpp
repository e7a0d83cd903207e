#include "fgf/galois.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "fgf/sexp.hpp"

namespace fgf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::CurveMismatch: return "CurveMismatch";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::CharTwo: return "CharTwo";
    case ErrorCode::TwistDegenerate: return "TwistDegenerate";
    case ErrorCode::PoleOfZ: return "PoleOfZ";
    case ErrorCode::FactorBudgetExceeded: return "FactorBudgetExceeded";
    case ErrorCode::NotOrdinary: return "NotOrdinary";
    case ErrorCode::IncompleteFactorization: return "IncompleteFactorization";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::UnboundPlaceholder: return "UnboundPlaceholder";
    case ErrorCode::UnassignedVariable: return "UnassignedVariable";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("FGF_BUDGET")) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), v);
    if (ec == std::errc() && v > 0) return v;
  }
  return kDefaultBudget;
}

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomials over a field, low degree first, trimmed (empty = 0).
using Poly = std::vector<Code>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, const Field& f) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Code lead_inv = f.inv(m.back());
  while (a.size() > dm) {
    Code c = f.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, m[j]));
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, const Field& f) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
  }
  return poly_mod(std::move(prod), m, f);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, const Field& f) {
  Poly result{1};
  base = poly_mod(std::move(base), m, f);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, m, f);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, m, f);
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, const Field& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Code li = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, li);
  }
  return a;
}

// Ben-Or: monic f of degree k is irreducible over F_Q iff
// gcd(f, x^(Q^i) - x) = 1 for 1 <= i <= k/2.
bool is_irreducible(const Poly& m, const Field& base) {
  const std::size_t k = m.size() - 1;
  if (k == 1) return true;
  Poly h{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    h = poly_powmod(h, base.order(), m, base);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = base.sub(diff[1], 1);
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(m, diff, base).size() > 1) return false;
  }
  return true;
}

Code encode(const Poly& a, std::uint32_t base_order, unsigned k) {
  Code code = 0;
  for (unsigned i = k; i-- > 0;) code = code * base_order + (i < a.size() ? a[i] : 0);
  return code;
}

Poly decode(Code code, std::uint32_t base_order, unsigned k) {
  Poly a(k);
  for (unsigned i = 0; i < k; ++i) {
    a[i] = code % base_order;
    code /= base_order;
  }
  trim(a);
  return a;
}

// Digitwise addition in F_p of two flattened codes.
Code add_digits(Code a, Code b, std::uint32_t p) {
  if (p == 2) return a ^ b;
  Code out = 0, scale = 1;
  while (a || b) {
    Code d = (a % p + b % p) % p;
    out += d * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return out;
}

}  // namespace

struct Field::Private {};

Field::Field(Private, std::uint32_t p, unsigned degree, FieldPtr base, std::vector<Code> modulus,
             std::uint64_t budget)
    : p_(p), degree_(degree), base_(std::move(base)), modulus_(std::move(modulus)) {
  const std::uint64_t base_q = base_ ? base_->order() : 1;
  abs_degree_ = base_ ? base_->absolute_degree() * degree : 1;
  std::uint64_t q = base_ ? 1 : p;
  if (base_) {
    for (unsigned i = 0; i < degree; ++i) {
      q *= base_q;
      if (q > budget || q > std::numeric_limits<std::uint32_t>::max())
        throw Error(ErrorCode::BudgetExceeded,
                    "field order exceeds enumeration budget " + std::to_string(budget));
    }
  }
  if (q > budget)
    throw Error(ErrorCode::BudgetExceeded,
                "field order exceeds enumeration budget " + std::to_string(budget));
  order_ = static_cast<std::uint32_t>(q);

  const std::uint32_t n = order_ - 1;
  exp_.assign(2 * static_cast<std::size_t>(n), 0);
  log_.assign(order_, kNoLog);
  const auto factors = distinct_prime_factors(n);

  if (!base_) {
    auto powmod = [p](std::uint64_t b, std::uint64_t e) {
      std::uint64_t r = 1;
      b %= p;
      while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
      }
      return r;
    };
    std::uint64_t g = 1;
    for (std::uint64_t c = 1; c < p; ++c) {
      bool primitive = std::all_of(factors.begin(), factors.end(),
                                   [&](std::uint64_t r) { return powmod(c, n / r) != 1; });
      if (primitive) {
        g = c;
        break;
      }
    }
    std::uint64_t v = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      exp_[i] = static_cast<Code>(v);
      v = v * g % p;
    }
  } else {
    const Field& b = *base_;
    const std::uint32_t bq = b.order();
    Poly gen;
    for (Code c = bq; c < order_; ++c) {  // skip constants; start at x
      Poly cand = decode(c, bq, degree_);
      bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t r) {
        Poly h = poly_powmod(cand, n / r, modulus_, b);
        return !(h.size() == 1 && h[0] == 1);
      });
      if (primitive) {
        gen = std::move(cand);
        break;
      }
    }
    Poly v{1};
    const bool gen_is_x = gen.size() == 2 && gen[0] == 0 && gen[1] == 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      exp_[i] = encode(v, bq, degree_);
      if (gen_is_x) {
        v.insert(v.begin(), 0);
        v = poly_mod(std::move(v), modulus_, b);
      } else {
        v = poly_mulmod(v, gen, modulus_, b);
      }
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    exp_[n + i] = exp_[i];
    log_[exp_[i]] = i;
  }
  zech_.assign(std::max<std::uint32_t>(n, 1), kNoLog);
  for (std::uint32_t i = 0; i < n; ++i) {
    Code s = add_digits(1, exp_[i], p_);
    zech_[i] = s == 0 ? kNoLog : log_[s];
  }
}

std::uint32_t Field::base_order() const noexcept { return base_ ? base_->order() : p_; }

std::vector<unsigned> Field::tower() const {
  std::vector<unsigned> out;
  for (const Field* f = this; f && f->base_; f = f->base_.get()) out.push_back(f->degree_);
  std::reverse(out.begin(), out.end());
  return out;
}

bool Field::same_as(const Field& other) const noexcept {
  if (this == &other) return true;
  if (p_ != other.p_ || degree_ != other.degree_ || order_ != other.order_ ||
      modulus_ != other.modulus_)
    return false;
  if (!base_ || !other.base_) return !base_ && !other.base_;
  return base_->same_as(*other.base_);
}

bool Field::has_subfield(const Field& sub) const noexcept {
  for (const Field* f = this; f; f = f->base_.get())
    if (f->same_as(sub)) return true;
  return false;
}

Code Field::from_integer(std::int64_t n) const noexcept {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Code>(r);
}

Code Field::add(Code a, Code b) const noexcept {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t n = order_ - 1;
  const std::uint32_t la = log_[a];
  std::uint32_t d = log_[b] >= la ? log_[b] - la : log_[b] + n - la;
  const std::uint32_t z = zech_[d];
  if (z == kNoLog) return 0;
  return exp_[la + z];
}

Code Field::neg(Code a) const noexcept {
  if (a == 0 || p_ == 2) return a;
  return exp_[log_[a] + (order_ - 1) / 2];
}

Code Field::mul(Code a, Code b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Code Field::inv(Code a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + name());
  const std::uint32_t n = order_ - 1;
  return exp_[(n - log_[a]) % n];
}

Code Field::pow(Code a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t n = order_ - 1;
  std::int64_t r = e % n;
  if (r < 0) r += n;
  return exp_[static_cast<std::uint32_t>((static_cast<unsigned __int128>(log_[a]) * r) % n)];
}

Code Field::frobenius(Code a) const noexcept { return pow(a, base_order()); }

bool Field::is_dth_power(Code a, std::uint64_t d) const noexcept {
  if (a == 0) return true;
  const std::uint64_t g = std::gcd<std::uint64_t>(d, order_ - 1);
  return log_[a] % g == 0;
}

std::uint32_t Field::log(Code a) const {
  if (a == 0 || a >= order_) throw Error(ErrorCode::DivisionByZero, "log of zero");
  return log_[a];
}

std::vector<Code> Field::coefficients(Code a) const {
  const std::uint32_t bq = base_order();
  if (!base_) return {a};
  std::vector<Code> out(degree_);
  for (unsigned i = 0; i < degree_; ++i) {
    out[i] = a % bq;
    a /= bq;
  }
  return out;
}

Code Field::from_coefficients(std::span<const Code> coeffs) const {
  if (!base_) {
    if (coeffs.size() != 1 || coeffs[0] >= p_)
      throw Error(ErrorCode::InvalidArgument, "prime-field element needs one residue");
    return coeffs[0];
  }
  if (coeffs.size() > degree_)
    throw Error(ErrorCode::LengthMismatch, "too many coefficients for " + name());
  const std::uint32_t bq = base_->order();
  Code code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= bq) throw Error(ErrorCode::InvalidArgument, "coefficient not in base field");
    code = code * bq + coeffs[i];
  }
  return code;
}

std::vector<Code> Field::elements(std::uint64_t budget) const {
  if (order_ > budget)
    throw Error(ErrorCode::BudgetExceeded, name() + " exceeds enumeration budget");
  std::vector<Code> out(order_);
  std::iota(out.begin(), out.end(), Code{0});
  return out;
}

std::string Field::format(Code a) const {
  if (!base_) return std::to_string(a);
  std::string out = "(elt";
  for (Code c : coefficients(a)) out += ' ' + base_->format(c);
  out += ')';
  return out;
}

namespace {

Code parse_elem(const Field& f, const Sexp& s) {
  if (!s.is_list) {
    std::int64_t v = 0;
    const char* first = s.atom.data();
    const char* last = first + s.atom.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) parse_fail(s.offset, "bad element literal '" + s.atom + "'");
    return f.from_integer(v);
  }
  if (s.items.empty() || !s.items[0].is_atom("elt")) parse_fail(s.offset, "expected (elt ...)");
  if (f.is_prime_field()) parse_fail(s.offset, "(elt ...) literal in a prime field");
  if (s.items.size() - 1 > f.degree())
    parse_fail(s.offset, "too many coefficients for " + f.name());
  std::vector<Code> coeffs;
  for (std::size_t i = 1; i < s.items.size(); ++i) coeffs.push_back(parse_elem(*f.base(), s.items[i]));
  return f.from_coefficients(coeffs);
}

}  // namespace

Code Field::parse(std::string_view literal) const { return parse_elem(*this, read_sexp(literal)); }

std::string Field::name() const { return "F_" + std::to_string(order_); }

FieldPtr make_prime_field(std::uint32_t p, std::uint64_t budget) {
  if (!is_prime_u64(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return std::make_shared<const Field>(Field::Private{}, p, 1, nullptr, std::vector<Code>{0, 1},
                                       budget);
}

FieldPtr make_extension(const FieldPtr& base, unsigned k, std::optional<std::vector<Code>> modulus,
                        std::uint64_t budget) {
  if (!base) throw Error(ErrorCode::InvalidArgument, "extension of a null field");
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
  if (k == 1 && !modulus) return base;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= base->order();
    if (q > budget)
      throw Error(ErrorCode::BudgetExceeded,
                  "extension order exceeds enumeration budget " + std::to_string(budget));
  }
  std::vector<Code> m;
  if (modulus) {
    m = *modulus;
    if (m.size() != k + 1 || m.back() != 1)
      throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree " + std::to_string(k));
    for (Code c : m)
      if (!base->valid(c)) throw Error(ErrorCode::InvalidArgument, "modulus coefficient not in base");
    if (!is_irreducible(m, *base)) throw Error(ErrorCode::ReducibleModulus, "modulus factors");
  } else {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < k; ++i) count *= base->order();
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Code> cand(k + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < k; ++i) {
        cand[i] = static_cast<Code>(c % base->order());
        c /= base->order();
      }
      cand[k] = 1;
      if (cand[0] != 0 && is_irreducible(cand, *base)) {
        m = std::move(cand);
        break;
      }
    }
    if (m.empty()) throw Error(ErrorCode::SearchExhausted, "no irreducible polynomial found");
  }
  return std::make_shared<const Field>(Field::Private{}, base->characteristic(), k, base,
                                       std::move(m), budget);
}

FieldPtr parse_field_spec(std::string_view spec, std::uint64_t budget) {
  std::vector<std::uint64_t> parts;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find('^', start);
    if (end == std::string_view::npos) end = spec.size();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(spec.data() + start, spec.data() + end, v);
    if (ec != std::errc() || ptr != spec.data() + end || v == 0)
      throw Error(ErrorCode::ParseError, "bad field spec '" + std::string(spec) + "'");
    parts.push_back(v);
    start = end + 1;
  }
  if (parts[0] > std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorCode::BudgetExceeded, "characteristic too large");
  FieldPtr f = make_prime_field(static_cast<std::uint32_t>(parts[0]), budget);
  for (std::size_t i = 1; i < parts.size(); ++i) f = make_extension(f, static_cast<unsigned>(parts[i]), std::nullopt, budget);
  return f;
}

FieldPtr make_field_of_order(std::uint32_t q, std::uint64_t budget) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "field order must be at least 2");
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned k = 0;
  std::uint32_t r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  return make_extension(make_prime_field(p, budget), k, std::nullopt, budget);
}

Elem::Elem(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
  if (!field_ || !field_->valid(code_))
    throw Error(ErrorCode::InvalidArgument, "code is not an element of the field");
}

Elem Elem::from_integer(FieldPtr field, std::int64_t n) {
  Code c = field->from_integer(n);
  return Elem(std::move(field), c);
}

void Elem::require_same(const Elem& o) const {
  if (!field_->same_as(*o.field_))
    throw Error(ErrorCode::FieldMismatch, field_->name() + " vs " + o.field_->name());
}

Elem Elem::operator+(const Elem& o) const {
  require_same(o);
  return Elem(field_, field_->add(code_, o.code_));
}
Elem Elem::operator-(const Elem& o) const {
  require_same(o);
  return Elem(field_, field_->sub(code_, o.code_));
}
Elem Elem::operator*(const Elem& o) const {
  require_same(o);
  return Elem(field_, field_->mul(code_, o.code_));
}
Elem Elem::operator/(const Elem& o) const {
  require_same(o);
  return Elem(field_, field_->div(code_, o.code_));
}
Elem Elem::operator-() const { return Elem(field_, field_->neg(code_)); }
Elem Elem::inverse() const { return Elem(field_, field_->inv(code_)); }
Elem Elem::pow(std::int64_t n) const { return Elem(field_, field_->pow(code_, n)); }
Elem Elem::frobenius() const { return Elem(field_, field_->frobenius(code_)); }
bool Elem::is_dth_power(std::uint64_t d) const { return field_->is_dth_power(code_, d); }

bool Elem::operator==(const Elem& o) const {
  require_same(o);
  return code_ == o.code_;
}

}  // namespace fgf
