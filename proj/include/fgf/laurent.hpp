#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "fgf/galois.hpp"

namespace fgf {

/// Element of the iterated Laurent field k((t_1))...((t_m)), m = depth.
/// Depth 0 is an element of k. At depth m >= 1 the series is
///   sum_{i < N} c_i t_m^(v + i) + O(t_m^(v + N))
/// with c_i of depth m - 1 and c_0 certified nonzero. Exact series carry no
/// error term. A zero series is either exactly zero or zero up to its
/// absolute precision.
class LaurentSeries {
 public:
  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max();

  /// Constant from k embedded at `depth`.
  static LaurentSeries constant(FieldPtr field, unsigned depth, Code c);
  static LaurentSeries zero(FieldPtr field, unsigned depth) { return constant(std::move(field), depth, 0); }
  static LaurentSeries one(FieldPtr field, unsigned depth) { return constant(std::move(field), depth, 1); }
  /// The variable t_j (1 <= j <= depth).
  static LaurentSeries variable(FieldPtr field, unsigned depth, unsigned j);
  /// sum c_i t^(v+i); inexact with absolute precision v + coeffs.size() unless `exact`.
  static LaurentSeries from_coefficients(FieldPtr field, unsigned depth, std::int64_t v,
                                         std::vector<LaurentSeries> coeffs, bool exact);
  /// Zero known only modulo t^abs_precision.
  static LaurentSeries zero_mod(FieldPtr field, unsigned depth, std::int64_t abs_precision);

  const FieldPtr& field() const noexcept { return field_; }
  unsigned depth() const noexcept { return depth_; }
  bool exact() const noexcept { return abs_ == kExact; }
  /// Absolute precision (kExact for exact series).
  std::int64_t absolute_precision() const noexcept { return abs_; }
  std::size_t relative_precision() const noexcept { return coeffs_.size(); }

  bool is_exact_zero() const noexcept;
  /// Zero as far as the precision reaches (includes exact zero).
  bool is_zero() const noexcept;
  bool certainly_nonzero() const noexcept { return !is_zero(); }

  /// Throws PrecisionExhausted on zero.
  std::int64_t valuation() const;
  const LaurentSeries& leading_coefficient() const;
  /// Coefficient of t^k (depth >= 1); zero beyond the stored range when exact.
  LaurentSeries coefficient(std::int64_t k) const;
  Code constant_value() const;  // depth 0 only

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator-(const LaurentSeries& o) const;
  LaurentSeries operator-() const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  /// Inverse to `precision` relative terms (exact for monomials).
  LaurentSeries inverse(std::size_t precision = 8) const;
  LaurentSeries pow(unsigned e) const;
  /// Multiplies by t_depth^k.
  LaurentSeries shift(std::int64_t k) const;
  /// Drops terms at or beyond t^abs.
  LaurentSeries truncate(std::int64_t abs) const;

  /// `(series :v V :coeffs (...))`, with ` :prec A` when inexact.
  std::string to_string() const;

 private:
  LaurentSeries(FieldPtr field, unsigned depth) : field_(std::move(field)), depth_(depth) {}
  void require_compatible(const LaurentSeries& o) const;
  void normalize();

  FieldPtr field_;
  unsigned depth_ = 0;
  Code value_ = 0;                      // depth 0
  std::int64_t start_ = 0;              // valuation when nonzero
  std::vector<LaurentSeries> coeffs_;   // depth >= 1
  std::int64_t abs_ = kExact;
};

/// Parses `(series :v V :coeffs (c ...) [:prec A])`; coefficients are element
/// literals at depth 1 and nested series literals deeper.
LaurentSeries parse_series(const FieldPtr& field, unsigned depth, std::string_view text);

/// Exact random element: valuation in [vmin, vmax], `terms` coefficients per
/// level, leading coefficient nonzero.
LaurentSeries random_series(const FieldPtr& field, unsigned depth, std::size_t terms, std::int64_t vmin,
                            std::int64_t vmax, std::mt19937_64& rng);

}  // namespace fgf
