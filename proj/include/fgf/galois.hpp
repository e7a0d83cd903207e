#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fgf/error.hpp"

namespace fgf {

/// Canonical encoding of a field element: the coefficient vector over the
/// base field read as digits in base (order of base), low degree first.
/// Because base codes are digits themselves, a base element embeds into an
/// extension with the same code.
using Code = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

/// Enumeration budget, overridable through the FGF_BUDGET environment variable.
std::uint64_t default_budget();

/// An immutable finite field F_{Q^k} built over a base field F_Q (or F_p when
/// the base is absent). Arithmetic runs on log/exp/Zech tables built once at
/// construction, so every operation is a few table lookups.
class Field {
 public:
  struct Private;  // construction goes through make_prime_field/make_extension

  Field(Private, std::uint32_t p, unsigned degree, FieldPtr base,
        std::vector<Code> modulus, std::uint64_t budget);

  std::uint32_t characteristic() const noexcept { return p_; }
  /// Degree over the immediate base.
  unsigned degree() const noexcept { return degree_; }
  /// Degree over the prime field.
  unsigned absolute_degree() const noexcept { return abs_degree_; }
  std::uint32_t order() const noexcept { return order_; }
  const FieldPtr& base() const noexcept { return base_; }
  bool is_prime_field() const noexcept { return base_ == nullptr; }
  /// Order of the immediate base (p for a prime field).
  std::uint32_t base_order() const noexcept;
  /// Monic modulus over the base, low degree first, leading 1 included.
  /// For a prime field this is x.
  const std::vector<Code>& modulus() const noexcept { return modulus_; }
  /// Tower degrees from the prime field upward, e.g. F_2 -> F_4 -> F_16 is {2, 2}.
  std::vector<unsigned> tower() const;

  bool same_as(const Field& other) const noexcept;
  /// True when `sub` is this field or one of its tower ancestors.
  bool has_subfield(const Field& sub) const noexcept;

  Code zero() const noexcept { return 0; }
  Code one() const noexcept { return 1; }
  Code from_integer(std::int64_t n) const noexcept;

  Code add(Code a, Code b) const noexcept;
  Code neg(Code a) const noexcept;
  Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }
  Code mul(Code a, Code b) const noexcept;
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::int64_t n) const;
  /// x -> x^(order of base); fixes exactly the base field.
  Code frobenius(Code a) const noexcept;
  bool is_dth_power(Code a, std::uint64_t d) const noexcept;
  /// Discrete logarithm to the table generator; a must be nonzero.
  std::uint32_t log(Code a) const;
  Code generator() const noexcept { return exp_[1]; }

  std::vector<Code> coefficients(Code a) const;
  Code from_coefficients(std::span<const Code> coeffs) const;
  bool valid(Code a) const noexcept { return a < order_; }

  /// All q elements in code order. Fails with BudgetExceeded above the budget.
  std::vector<Code> elements(std::uint64_t budget = default_budget()) const;

  /// Element literal: an integer in a prime field, `(elt c0 c1 ...)` otherwise.
  std::string format(Code a) const;
  Code parse(std::string_view literal) const;
  std::string name() const;

 private:
  std::uint32_t p_;
  unsigned degree_;
  unsigned abs_degree_;
  std::uint32_t order_;
  FieldPtr base_;
  std::vector<Code> modulus_;
  std::vector<Code> exp_;           // exp_[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
  std::vector<std::uint32_t> zech_; // zech_[n] = log(1 + g^n), kNoLog if zero
};

FieldPtr make_prime_field(std::uint32_t p, std::uint64_t budget = default_budget());

/// Extension of degree k over `base`. Without a modulus, the first monic
/// irreducible polynomial is taken, ordering candidates by the integer code
/// of their low coefficients (c0 least significant).
FieldPtr make_extension(const FieldPtr& base, unsigned k,
                        std::optional<std::vector<Code>> modulus = std::nullopt,
                        std::uint64_t budget = default_budget());

/// Parses "p", "p^k" (one step) or "p^k1^k2..." (a tower).
FieldPtr parse_field_spec(std::string_view spec, std::uint64_t budget = default_budget());

/// F_q for a prime power q, built as a single extension of F_p.
FieldPtr make_field_of_order(std::uint32_t q, std::uint64_t budget = default_budget());

bool is_prime_u64(std::uint64_t n) noexcept;

/// Field element value: a code together with the field it belongs to.
/// Mixed-field arithmetic throws FieldMismatch.
class Elem {
 public:
  Elem(FieldPtr field, Code code);
  static Elem from_integer(FieldPtr field, std::int64_t n);

  const FieldPtr& field() const noexcept { return field_; }
  Code code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem operator/(const Elem& o) const;
  Elem operator-() const;
  Elem inverse() const;
  Elem pow(std::int64_t n) const;
  Elem frobenius() const;
  bool is_dth_power(std::uint64_t d) const;
  Elem one() const { return Elem(field_, 1); }
  Elem zero() const { return Elem(field_, 0); }

  bool operator==(const Elem& o) const;
  std::string to_string() const { return field_->format(code_); }

 private:
  void require_same(const Elem& o) const;

  FieldPtr field_;
  Code code_;
};

}  // namespace fgf
