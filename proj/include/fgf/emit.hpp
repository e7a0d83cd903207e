#pragma once

#include <string>
#include <vector>

#include "fgf/logic.hpp"

namespace fgf {

/// Coefficients of <<a_1, ..., a_n>>_d as terms, in the same order as the
/// coefficient-level pfister(): the existing form is the outer index.
std::vector<Term> pfister_terms(unsigned d, const std::vector<Term>& slots);
std::vector<Term> tensor_terms(const std::vector<Term>& f, const std::vector<Term>& g);

/// Exists x_1..x_n (sum c_i x_i^d = 0 and not all x_i = 0), free in c1..cn.
Formula emit_represents_zero(std::size_t n, unsigned d);

/// Same construction over given coefficient terms. Witness variables are
/// named from `base` and avoid every variable of the coefficients. A zero
/// coefficient makes the formula true, since its variable alone is a witness.
Formula emit_represents_zero(const std::vector<Term>& coeffs, unsigned d, const std::string& base = "x");

/// Quadratic zero test over the pair ring F[i]/(i^2 + 1): every witness x_k
/// is a pair (x_k, y_k) and the real and imaginary parts of sum c_k x_k^2
/// both vanish. When -1 is a square the pair ring is split and the formula
/// tests zeros in that algebra rather than in a field.
Formula emit_represents_zero_pair(const std::vector<Term>& coeffs, const std::string& base = "x");

/// exists x exists y (y^2 = x^3 + a x + b and y != 0 and s y = x).
Formula emit_S_family();
/// exists s1 exists s2 (S(s1) and S(s2) and s1 != 0 and s2 != 0 and t s2 = s1).
Formula emit_T_family();

/// forall s1 s2 s3 (S(s1) and S(s2) and S(s3) -> <<s1, s2, t - s3>>_2 has a
/// nontrivial zero over the pair ring). `S` is free in `var` plus parameters;
/// the result is free in t and those parameters.
Formula emit_A_S(const Formula& S, const std::string& var = "s");

/// S closed under addition, S != 2S, and 2 != 0, with S a unary hole.
Formula emit_char0_sentence(const std::string& placeholder = "Z_PREDICATE");

/// Membership test for t with curve y^2 = x^3 + a x + b, twist parameter u
/// and non-square c; d = 2 only (UnsupportedDegree otherwise).
///   U1(v): v != 0 and exists y (f(u) y^2 = f(v))
///   U2(v): exists x1 y1 x2 y2 with U1-witnesses and v x1 x2 = y1 x2 + y2 x1
/// The core is the represents-zero formula of
/// <1, -c, w, -c w, t - u2, -c (t - u2), (t - u2) w, -c (t - u2) w>
/// where w is the inverse of u1.
Formula emit_anisotropy_membership(unsigned d);

/// forall a b c1..cn (L(a) and L(b) and L(c_i) -> <<t1 - c1, ..., tn - cn, a>>_d
/// tensor <1, -b>_d represents 0), free in t1..tn, with L a unary hole.
Formula emit_algdep_template(unsigned n, unsigned d, const std::string& placeholder = "SUBFIELD");

struct UnaryEntry {
  std::string name;
  Binding binding;
};

/// Ten fixed unary formulas in the variable x.
std::vector<UnaryEntry> unary_catalogue();

/// Names accepted by emit_by_name: represents-zero-N-D, S, T, A_S,
/// char0, anisotropy-membership, algdep-N-D.
Formula emit_by_name(const std::string& name);

}  // namespace fgf
