#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgf/curves.hpp"

namespace fgf {

/// m * E(F_q), sorted.
std::vector<Point> subgroup_by_multiplier(const Curve& curve, std::uint64_t m,
                                          std::uint64_t budget = default_budget());

struct ZSumSet {
  std::vector<Code> sums;         // sorted, distinct
  bool empty_after_poles = false; // every element of G was a pole of z
};

/// {z(g1) + z(g2)} over ordered pairs of non-poles of G.
ZSumSet z_sum_set(const Curve& curve, const std::vector<Point>& group);

struct ZSumReport {
  std::uint64_t q = 0;
  std::string curve;              // "a1,a2,a3,a4,a6"
  std::uint64_t group_order = 0;
  std::uint64_t multiplier = 1;
  std::uint64_t index = 1;
  std::uint64_t subgroup_order = 0;
  std::vector<Code> sums;
  std::vector<Code> missing;
  bool covered = false;
  bool empty_after_poles = false;
};

ZSumReport zsum_report(const Curve& curve, std::uint64_t multiplier, std::uint64_t budget = default_budget());

struct ZSumOptions {
  std::size_t sample_size = 8;
  unsigned threads = 1;
  std::uint64_t budget = default_budget();
};

/// Curves from an evenly strided walk through the lexicographic coefficient
/// space of `field` (singular vectors skipped).
std::vector<Curve> zsum_sample(const FieldPtr& field, std::size_t sample_size);

/// For each sampled curve, one report per distinct subgroup m * E(F_q) of
/// index <= index_bound, ordered by (curve, multiplier).
std::vector<ZSumReport> zsum_scan(const FieldPtr& field, std::uint64_t index_bound,
                                  const ZSumOptions& options = {});

struct ZSumSummary {
  struct PerField {
    std::uint64_t q = 0;
    std::size_t curves = 0;
    std::size_t covered_full_group = 0;  // index-1 reports that cover F_q
  };
  std::vector<PerField> fields;
  /// Smallest q with some covering report at index 1, 2, 3.
  std::optional<std::uint64_t> first_covering[3];
};

ZSumSummary summarize(const std::vector<ZSumReport>& reports);

}  // namespace fgf
