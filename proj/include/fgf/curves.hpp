#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fgf/galois.hpp"

namespace fgf {

/// A rational point: the identity O, or affine coordinates in the curve's field.
struct Point {
  bool infinity = true;
  Code x = 0;
  Code y = 0;

  static Point at_infinity() { return {}; }
  static Point affine(Code x, Code y) { return {false, x, y}; }

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) {
    // O sorts first, then (x, y).
    if (a.infinity != b.infinity) return b.infinity <=> a.infinity;
    if (a.infinity) return std::strong_ordering::equal;
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

/// Packs a point into one integer key (O maps to all-ones).
inline std::uint64_t point_key(const Point& p) {
  return p.infinity ? ~std::uint64_t{0} : (std::uint64_t{p.x} << 32) | p.y;
}

/// Long Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
class Curve {
 public:
  /// Throws SingularCurve when the discriminant vanishes.
  Curve(FieldPtr field, std::array<Code, 5> a);
  static Curve from_elems(const Elem& a1, const Elem& a2, const Elem& a3, const Elem& a4,
                          const Elem& a6);
  /// y^2 = x^3 + a x + b.
  static Curve short_form(FieldPtr field, Code a, Code b);

  const FieldPtr& field() const noexcept { return field_; }
  const std::array<Code, 5>& coefficients() const noexcept { return a_; }
  Code a1() const noexcept { return a_[0]; }
  Code a2() const noexcept { return a_[1]; }
  Code a3() const noexcept { return a_[2]; }
  Code a4() const noexcept { return a_[3]; }
  Code a6() const noexcept { return a_[4]; }
  Code discriminant() const noexcept { return disc_; }
  bool is_short_form() const noexcept { return a_[0] == 0 && a_[1] == 0 && a_[2] == 0; }

  bool contains(const Point& p) const noexcept;

  /// Group law; points are validated and CurveMismatch is thrown for strays.
  Point add(const Point& p, const Point& q) const;
  Point neg(const Point& p) const;
  Point mul(std::int64_t n, const Point& p) const;

  /// Same operations without membership checks, for enumerated points.
  Point add_unchecked(const Point& p, const Point& q) const noexcept;
  Point neg_unchecked(const Point& p) const noexcept;
  Point mul_unchecked(std::int64_t n, const Point& p) const noexcept;

  /// All rational points, O first then ascending (x, y).
  std::vector<Point> points(std::uint64_t budget = default_budget()) const;
  std::uint64_t count_points(std::uint64_t budget = default_budget()) const;

  /// The same equation over an extension in the tower above field().
  Curve base_change(const FieldPtr& extension) const;

  /// Canonical "a1,a2,a3,a4,a6" with element literals.
  std::string spec() const;
  std::string describe() const;

  friend bool operator==(const Curve& a, const Curve& b) {
    return a.field_->same_as(*b.field_) && a.a_ == b.a_;
  }

 private:
  void require_on_curve(const Point& p) const;

  FieldPtr field_;
  std::array<Code, 5> a_;
  Code disc_;
};

/// Discriminant of the long Weierstrass form (zero means singular).
Code weierstrass_discriminant(const Field& f, const std::array<Code, 5>& a);

/// Parses "a1,a2,a3,a4,a6" with element literals of `field`.
Curve parse_curve_spec(const FieldPtr& field, std::string_view spec);

/// q, #E(F_q), trace t = q + 1 - #E(F_q) and the ordinarity flag (t mod p != 0).
struct FrobeniusData {
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint64_t n1 = 0;
  std::int64_t t = 0;
  bool ordinary = false;
};

FrobeniusData frobenius_trace(const Curve& curve, std::uint64_t budget = default_budget());
/// Builds the data directly from (p, q, t); ordinarity follows from t mod p.
FrobeniusData frobenius_data(std::uint32_t p, std::uint64_t q, std::int64_t t);

/// Trace of F^ell via t_1 = t, t_2 = t^2 - 2q, t_{j+1} = t t_j - q t_{j-1}.
mpz_class trace_power(const FrobeniusData& fd, unsigned ell);
/// #E(F_{q^ell}) = q^ell + 1 - t_ell, exact.
mpz_class count_over_extension(const FrobeniusData& fd, unsigned ell);

/// Raises both coordinates to the |relative_to|-th power. The curve's
/// coefficients must lie in relative_to (checked).
Point frobenius_endo(const Curve& curve, const Point& p, const Field& relative_to);

/// Lexicographic scan of (a1,a2,a3,a4,a6), a1 most significant. Returns the
/// first curve with trace 1 seen within `candidate_budget` coefficient
/// vectors, or else the first ordinary one seen.
Curve find_ordinary_curve(const FieldPtr& field, std::uint64_t candidate_budget = 1u << 16);

/// y^2 = x^3 + a x + b  ->  y^2 = x^3 + a f(u)^2 x + b f(u)^3, the Weierstrass
/// model of f(u) y^2 = f(x).
Curve quadratic_twist(const Curve& curve, Code u);

/// z = y/x; PoleOfZ at O and at points with x = 0.
Code z_coord(const Curve& curve, const Point& p);

}  // namespace fgf
