#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fgf/forms.hpp"

namespace fgf {

enum class Conclusion { Anisotropic, Isotropic, Inconclusive };
std::string_view to_string(Conclusion c);

/// One checked step of the valuation argument. Level 0 is the residue
/// field; level j adjoins t_j.
struct ProofStep {
  unsigned level = 0;
  std::string kind;   // residue-exhaustive | unit-coefficients | block-structure | valuation-classes | falsification
  std::string claim;
  bool checked = false;
};

struct Falsification {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t precision = 0;   // terms per Laurent level
  std::uint64_t witnesses = 0; // vectors with q(x) = 0 (must stay 0)
  std::uint64_t class_checks = 0;
  std::uint64_t class_violations = 0;
};

struct AnisotropyCertificate {
  Conclusion conclusion = Conclusion::Inconclusive;
  unsigned d = 0;
  unsigned levels = 0;
  std::string residue_form;
  std::string form;
  std::vector<ProofStep> trace;
  std::vector<std::string> witness;   // isotropic case, formatted entries
  bool witness_checked = false;
  Falsification falsification;
};

struct AnisotropyOptions {
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0x5eed;
  std::size_t precision = 8;
  std::uint64_t budget = default_budget();
};

/// q_0 = q_res and q_j = <<t_j>>_d tensor q_{j-1} over k((t_1))...((t_m)).
LaurentForm lift_form(const FFForm& residue, unsigned m);

/// Certificate for q_res tensor <<t_1, ..., t_m>>_d (up to ordering). m = 0
/// is the exhaustive residue check alone.
AnisotropyCertificate local_params_anisotropy(const FFForm& residue, unsigned m,
                                              const AnisotropyOptions& options = {});

/// The single-parameter case m = 1.
AnisotropyCertificate dvr_anisotropy_check(const FFForm& residue, const AnisotropyOptions& options = {});

}  // namespace fgf
