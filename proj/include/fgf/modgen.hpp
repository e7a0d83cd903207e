#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fgf/curves.hpp"
#include "fgf/mersenne.hpp"

namespace fgf {

/// Smallest subgroup of E(F_{q^ell}) containing E(F_q) and F^i(P) for
/// 0 <= i < ell, sorted. `curve` lives over F_q; `extension` must have been
/// built directly over curve.field(). Closure under addition, negation and
/// Frobenius is asserted before returning.
std::vector<Point> frobenius_submodule(const Curve& curve, const FieldPtr& extension, const Point& p,
                                       std::uint64_t budget = default_budget());

enum class GenerationMethod { Lattice, Closure };

struct GenerationReport {
  std::uint64_t q = 0;
  unsigned ell = 0;
  mpz_class n;              // #E(F_{q^ell}) / #E(F_q)
  PsiValue psi;
  /// Ring used for the count: Z[F], or Z[F] with an extra automorphism
  /// ("Z[F,i]" for j = 1728, "Z[F,zeta3]" for j = 0) when one is defined over F_q.
  std::string ring = "Z[F]";
  std::uint64_t generating = 0;
  std::uint64_t generating_frobenius = 0;  // count under Z[F] alone
  std::uint64_t total = 0;
  mpq_class fraction;
  mpq_class bound;          // 1 - 2 psi(n)
  bool pass = false;
  /// Set when the bound fails: the ring used may be smaller than the full
  /// endomorphism ring, so the count is only a lower bound.
  bool end_ring_caveat = false;
  /// Group structure Z/n1 x Z/n2 of E(F_{q^ell}), n2 | n1.
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
};

/// Exhaustive count of P in E(F_{q^ell}) whose submodule together with E(F_q)
/// is everything. Both Z[F] and the enlarged ring are counted; the
/// fraction and pass flag use the enlarged ring. The lattice method works in
/// coordinates of a basis of E(F_{q^ell}); the closure method builds each
/// submodule point by point and is only practical for small groups.
GenerationReport generation_fraction(const Curve& curve, unsigned ell,
                                     GenerationMethod method = GenerationMethod::Lattice,
                                     std::uint64_t budget = default_budget());

}  // namespace fgf
