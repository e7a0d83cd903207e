#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fgf/galois.hpp"
#include "fgf/laurent.hpp"

namespace fgf {

/// Coefficient domain: a finite field with elements as codes.
struct FiniteFieldDomain {
  using value_type = Code;
  FieldPtr field;

  Code zero() const { return 0; }
  Code one() const { return 1; }
  Code add(Code a, Code b) const { return field->add(a, b); }
  Code mul(Code a, Code b) const { return field->mul(a, b); }
  Code neg(Code a) const { return field->neg(a); }
  bool is_zero(Code a) const { return a == 0; }
  Code pow(Code a, unsigned e) const { return field->pow(a, e); }
  std::string format(Code a) const { return field->format(a); }
  bool same_as(const FiniteFieldDomain& o) const { return field->same_as(*o.field); }
};

/// Coefficient domain: k((t_1))...((t_depth)).
struct LaurentDomain {
  using value_type = LaurentSeries;
  FieldPtr field;
  unsigned depth = 1;

  LaurentSeries zero() const { return LaurentSeries::zero(field, depth); }
  LaurentSeries one() const { return LaurentSeries::one(field, depth); }
  LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) const { return a + b; }
  LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) const { return a * b; }
  LaurentSeries neg(const LaurentSeries& a) const { return -a; }
  bool is_zero(const LaurentSeries& a) const { return a.is_zero(); }
  LaurentSeries pow(const LaurentSeries& a, unsigned e) const { return a.pow(e); }
  std::string format(const LaurentSeries& a) const { return a.to_string(); }
  bool same_as(const LaurentDomain& o) const { return depth == o.depth && field->same_as(*o.field); }
  LaurentSeries constant(Code c) const { return LaurentSeries::constant(field, depth, c); }
  LaurentSeries variable(unsigned j) const { return LaurentSeries::variable(field, depth, j); }
};

/// a_1 x_1^d + ... + a_n x_n^d with every a_i nonzero.
template <class D>
class DiagonalForm {
 public:
  using value_type = typename D::value_type;

  DiagonalForm(D domain, unsigned d, std::vector<value_type> coeffs)
      : dom_(std::move(domain)), d_(d), a_(std::move(coeffs)) {
    if (d_ < 2) throw Error(ErrorCode::InvalidArgument, "form degree must be at least 2");
    for (const auto& c : a_)
      if (dom_.is_zero(c)) throw Error(ErrorCode::ZeroCoefficient, "diagonal forms need nonzero coefficients");
  }

  const D& domain() const noexcept { return dom_; }
  unsigned degree() const noexcept { return d_; }
  std::size_t size() const noexcept { return a_.size(); }
  const std::vector<value_type>& coefficients() const noexcept { return a_; }

  value_type eval(std::span<const value_type> x) const {
    if (x.size() != a_.size())
      throw Error(ErrorCode::LengthMismatch,
                  "form in " + std::to_string(a_.size()) + " variables got " + std::to_string(x.size()));
    value_type sum = dom_.zero();
    for (std::size_t i = 0; i < a_.size(); ++i) sum = dom_.add(sum, dom_.mul(a_[i], dom_.pow(x[i], d_)));
    return sum;
  }

  /// `(form :d D :coeffs (...))`
  std::string to_string() const {
    std::string out = "(form :d " + std::to_string(d_) + " :coeffs (";
    for (std::size_t i = 0; i < a_.size(); ++i) out += (i ? " " : "") + dom_.format(a_[i]);
    return out + "))";
  }

 private:
  D dom_;
  unsigned d_;
  std::vector<value_type> a_;
};

using FFForm = DiagonalForm<FiniteFieldDomain>;
using LaurentForm = DiagonalForm<LaurentDomain>;

/// Coefficients a_i b_j, i outer and j inner.
template <class D>
DiagonalForm<D> tensor(const DiagonalForm<D>& f, const DiagonalForm<D>& g) {
  if (f.degree() != g.degree())
    throw Error(ErrorCode::DegreeMismatch, "tensor of forms of degrees " + std::to_string(f.degree()) + " and " +
                                               std::to_string(g.degree()));
  if (!f.domain().same_as(g.domain())) throw Error(ErrorCode::FieldMismatch, "tensor across coefficient domains");
  std::vector<typename D::value_type> c;
  c.reserve(f.size() * g.size());
  for (const auto& a : f.coefficients())
    for (const auto& b : g.coefficients()) c.push_back(f.domain().mul(a, b));
  return DiagonalForm<D>(f.domain(), f.degree(), std::move(c));
}

/// <<a_1, ..., a_n>>_d = tensor over i of <1, a_i, ..., a_i^(d-1)>, d^n coefficients.
template <class D>
DiagonalForm<D> pfister(const D& domain, unsigned d, const std::vector<typename D::value_type>& a) {
  DiagonalForm<D> out(domain, d, {domain.one()});
  for (const auto& ai : a) {
    if (domain.is_zero(ai)) throw Error(ErrorCode::ZeroCoefficient, "Pfister slot is zero");
    std::vector<typename D::value_type> slot{domain.one()};
    for (unsigned k = 1; k < d; ++k) slot.push_back(domain.mul(slot.back(), ai));
    out = tensor(out, DiagonalForm<D>(domain, d, std::move(slot)));
  }
  return out;
}

FFForm make_form(const FieldPtr& field, unsigned d, std::vector<Code> coeffs);
/// Parses `(form :d D :coeffs (c ...))` with element literals of `field`.
FFForm parse_form(const FieldPtr& field, std::string_view text);
/// Same coefficients viewed in an extension built over the form's field.
FFForm base_change(const FFForm& form, const FieldPtr& extension);

enum class ZeroStatus { Found, ProvenNone, TrialsExhausted };
std::string_view to_string(ZeroStatus s);

struct ZeroSearchOptions {
  bool exhaustive = true;
  std::uint64_t trials = 10000;   // random mode
  std::uint64_t seed = 0x5eed;
  std::uint64_t budget = default_budget();
};

struct ZeroSearchResult {
  ZeroStatus status = ZeroStatus::ProvenNone;
  std::vector<Code> witness;
  std::uint64_t visited = 0;
  bool found() const { return status == ZeroStatus::Found; }
};

/// Exhaustive mode walks F_q^n in lexicographic order (x_1 most significant)
/// and returns the first nontrivial zero; ProvenNone means anisotropic.
/// Random mode tries seeded nonzero vectors and ends in TrialsExhausted.
ZeroSearchResult find_zero(const FFForm& form, const ZeroSearchOptions& options = {});

struct SpringerCase {
  std::vector<Code> coeffs;
  bool zero_over_base = false;
  bool zero_over_extension = false;
  bool counterexample = false;
};

struct SpringerReport {
  unsigned d = 0;
  std::uint64_t base_order = 0;
  std::uint64_t extension_order = 0;
  unsigned extension_degree = 0;
  std::vector<SpringerCase> cases;
  std::size_t counterexamples = 0;
  bool pass = false;
};

/// All forms <a, b> with a, b in the base's unit group: a zero over the
/// extension must come with a zero over the base. Requires d = 2 with odd
/// degree or d = 3 with degree 2.
SpringerReport springer_experiment(unsigned d, const FieldPtr& base, unsigned extension_degree,
                                   std::uint64_t budget = default_budget());

/// 3 in characteristic 2, else 2.
unsigned char_rule_degree(const Field& field);

struct CwReport {
  std::uint64_t q = 0;
  unsigned d = 0;
  std::uint64_t tuples = 0;
  std::vector<std::vector<Code>> failures;  // (a, b, c) without a zero
  bool pass = false;
};

/// <<a>>_d tensor <b, c> for every (a, b, c) in (F_q^x)^3.
CwReport cw_check(const FieldPtr& field, std::uint64_t budget = default_budget());

}  // namespace fgf
