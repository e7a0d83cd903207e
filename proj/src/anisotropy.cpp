#include "fgf/anisotropy.hpp"

#include <algorithm>
#include <random>

namespace fgf {

std::string_view to_string(Conclusion c) {
  switch (c) {
    case Conclusion::Anisotropic: return "anisotropic";
    case Conclusion::Isotropic: return "isotropic";
    case Conclusion::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

LaurentForm lift_form(const FFForm& residue, unsigned m) {
  const LaurentDomain dom{residue.domain().field, m};
  std::vector<LaurentSeries> cs;
  for (Code c : residue.coefficients()) cs.push_back(dom.constant(c));
  LaurentForm q(dom, residue.degree(), std::move(cs));
  for (unsigned j = 1; j <= m; ++j) q = tensor(pfister(dom, residue.degree(), {dom.variable(j)}), q);
  return q;
}

namespace {

// The level-(j-1) form sits in the first block of q_j; block i of q_j is
// t_j^i times it.
bool check_blocks(const LaurentForm& q, std::size_t inner, unsigned j) {
  const unsigned d = q.degree();
  const LaurentDomain& dom = q.domain();
  const auto& c = q.coefficients();
  if (c.size() != inner * d) return false;
  const LaurentSeries t = dom.variable(j);
  LaurentSeries scale = dom.one();
  for (unsigned i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      const LaurentSeries diff = c[i * inner + k] - scale * c[k];
      if (!diff.is_exact_zero()) return false;
    }
    scale = scale * t;
  }
  return true;
}

// Valuation in t_j of an element at depth m >= j.
std::int64_t valuation_in(const LaurentSeries& x, unsigned j) {
  if (x.depth() == j) return x.valuation();
  return valuation_in(x.leading_coefficient(), j);
}

bool unit_in(const LaurentSeries& x, unsigned j) {
  if (x.is_zero()) return false;
  // a constant in t_j: depth-m series whose t_m .. t_{j+1} parts are single
  // degree-0 terms and whose t_j valuation is 0
  const LaurentSeries* cur = &x;
  while (cur->depth() > j) {
    if (cur->valuation() != 0 || cur->relative_precision() != 1 || !cur->exact()) return false;
    cur = &cur->leading_coefficient();
  }
  return cur->valuation() == 0;
}

}  // namespace

AnisotropyCertificate local_params_anisotropy(const FFForm& residue, unsigned m, const AnisotropyOptions& options) {
  const FieldPtr& field = residue.domain().field;
  const unsigned d = residue.degree();
  AnisotropyCertificate cert;
  cert.d = d;
  cert.levels = m;
  cert.residue_form = residue.to_string();

  ZeroSearchOptions zopt;
  zopt.budget = options.budget;
  const ZeroSearchResult z = find_zero(residue, zopt);

  const LaurentForm lifted = lift_form(residue, m);
  cert.form = lifted.to_string();

  if (z.found()) {
    cert.conclusion = Conclusion::Isotropic;
    cert.trace.push_back({0, "residue-exhaustive",
                          "nontrivial zero over " + field->name() + " after " + std::to_string(z.visited) + " vectors",
                          true});
    if (m == 0) {
      for (Code w : z.witness) cert.witness.push_back(field->format(w));
      cert.witness_checked = residue.eval(z.witness) == 0;
      return cert;
    }
    const LaurentDomain& dom = lifted.domain();
    std::vector<LaurentSeries> w(lifted.size(), dom.zero());
    for (std::size_t k = 0; k < z.witness.size(); ++k) w[k] = dom.constant(z.witness[k]);
    cert.witness_checked = lifted.eval(w).is_exact_zero();
    for (const auto& e : w) cert.witness.push_back(e.to_string());
    cert.trace.push_back({m, "witness-lift", "constant witness in the first block evaluates to 0", cert.witness_checked});
    return cert;
  }

  cert.trace.push_back({0, "residue-exhaustive",
                        "no nontrivial zero over " + field->name() + " among " + std::to_string(z.visited) +
                            " vectors",
                        true});
  bool all_checked = true;
  for (unsigned j = 1; j <= m; ++j) {
    const LaurentForm qj = lift_form(residue, j);
    const LaurentForm qprev = lift_form(residue, j - 1);
    const std::size_t inner = qprev.size();

    bool units = true;
    for (std::size_t k = 0; k < inner; ++k) units = units && unit_in(qj.coefficients()[k], j);
    cert.trace.push_back({j, "unit-coefficients",
                          "the " + std::to_string(inner) + " coefficients of q_" + std::to_string(j - 1) +
                              " are units for v_t" + std::to_string(j),
                          units});
    const bool blocks = check_blocks(qj, inner, j);
    cert.trace.push_back({j, "block-structure",
                          "q_" + std::to_string(j) + "(x) = sum_{i<" + std::to_string(d) + "} t" + std::to_string(j) +
                              "^i q_" + std::to_string(j - 1) + "(x_i)",
                          blocks});
    cert.trace.push_back({j, "valuation-classes",
                          "q_" + std::to_string(j - 1) + " anisotropic mod t" + std::to_string(j) +
                              " gives v(q_" + std::to_string(j - 1) + "(x_i)) = " + std::to_string(d) +
                              " min v(x_i); the terms lie in distinct classes i mod " + std::to_string(d) +
                              ", so q_" + std::to_string(j) + "(x) != 0",
                          units && blocks});
    all_checked = all_checked && units && blocks;
  }

  Falsification& fals = cert.falsification;
  fals.trials = m == 0 ? 0 : options.trials;
  fals.seed = options.seed;
  fals.precision = options.precision;
  if (m > 0) {
    std::mt19937_64 rng(options.seed);
    const LaurentDomain& dom = lifted.domain();
    const std::size_t inner = lifted.size() / d;
    const auto& coeffs = lifted.coefficients();
    std::vector<LaurentSeries> x(lifted.size(), dom.zero());
    for (std::uint64_t t = 0; t < options.trials; ++t) {
      bool nonzero = false;
      for (auto& e : x) {
        if (rng() % 4 == 0) {
          e = dom.zero();
        } else {
          e = random_series(field, m, options.precision, -2, 2, rng);
          nonzero = true;
        }
      }
      if (!nonzero) x[0] = dom.one();
      if (lifted.eval(x).is_zero()) ++fals.witnesses;
      // each nonzero block value has t_m-valuation congruent to its index
      for (unsigned i = 0; i < d; ++i) {
        LaurentSeries block = dom.zero();
        std::int64_t vmin = LaurentSeries::kExact;
        for (std::size_t k = 0; k < inner; ++k) {
          const LaurentSeries& e = x[i * inner + k];
          block = block + coeffs[i * inner + k] * e.pow(d);
          if (!e.is_zero()) vmin = std::min(vmin, valuation_in(e, m));
        }
        if (vmin == LaurentSeries::kExact) continue;
        ++fals.class_checks;
        const std::int64_t expect = static_cast<std::int64_t>(d) * vmin + i;
        if (block.is_zero() || valuation_in(block, m) != expect) ++fals.class_violations;
      }
    }
    cert.trace.push_back({m, "falsification",
                          std::to_string(options.trials) + " seeded vectors at " + std::to_string(options.precision) +
                              " terms per level: " + std::to_string(fals.witnesses) + " zeros, " +
                              std::to_string(fals.class_violations) + " class violations",
                          fals.witnesses == 0 && fals.class_violations == 0});
  }
  const bool survived = fals.witnesses == 0 && fals.class_violations == 0;
  cert.conclusion = all_checked && survived ? Conclusion::Anisotropic : Conclusion::Inconclusive;
  return cert;
}

AnisotropyCertificate dvr_anisotropy_check(const FFForm& residue, const AnisotropyOptions& options) {
  return local_params_anisotropy(residue, 1, options);
}

}  // namespace fgf
