#include "fgf/zsum.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace fgf {

std::vector<Point> subgroup_by_multiplier(const Curve& curve, std::uint64_t m, std::uint64_t budget) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "multiplier must be at least 1");
  std::vector<Point> out;
  for (const Point& p : curve.points(budget)) out.push_back(curve.mul_unchecked(static_cast<std::int64_t>(m), p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ZSumSet z_sum_set(const Curve& curve, const std::vector<Point>& group) {
  const Field& f = *curve.field();
  std::vector<Code> zs;
  for (const Point& g : group)
    if (!g.infinity && g.x != 0) zs.push_back(z_coord(curve, g));
  ZSumSet out;
  if (zs.empty()) {
    out.empty_after_poles = true;
    return out;
  }
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
  std::vector<bool> hit(f.order(), false);
  for (Code a : zs)
    for (Code b : zs) hit[f.add(a, b)] = true;
  for (Code c = 0; c < f.order(); ++c)
    if (hit[c]) out.sums.push_back(c);
  return out;
}

ZSumReport zsum_report(const Curve& curve, std::uint64_t multiplier, std::uint64_t budget) {
  ZSumReport r;
  const Field& f = *curve.field();
  r.q = f.order();
  r.curve = curve.spec();
  r.group_order = curve.count_points(budget);
  r.multiplier = multiplier;
  const auto g = subgroup_by_multiplier(curve, multiplier, budget);
  r.subgroup_order = g.size();
  r.index = r.group_order / r.subgroup_order;
  ZSumSet s = z_sum_set(curve, g);
  r.empty_after_poles = s.empty_after_poles;
  r.sums = std::move(s.sums);
  std::vector<bool> hit(f.order(), false);
  for (Code c : r.sums) hit[c] = true;
  for (Code c = 0; c < f.order(); ++c)
    if (!hit[c]) r.missing.push_back(c);
  r.covered = r.missing.empty();
  return r;
}

std::vector<Curve> zsum_sample(const FieldPtr& field, std::size_t sample_size) {
  const std::uint64_t q = field->order();
  std::uint64_t total = 1;
  for (int i = 0; i < 5; ++i) total *= q;
  const std::uint64_t stride = std::max<std::uint64_t>(1, total / std::max<std::size_t>(sample_size, 1));
  std::vector<Curve> out;
  for (std::uint64_t idx = 0; idx < total && out.size() < sample_size; idx += stride) {
    // Walk forward from each stride point to the next nonsingular vector.
    for (std::uint64_t j = idx; j < total && j < idx + stride; ++j) {
      std::array<Code, 5> a{};
      std::uint64_t c = j;
      for (int i = 4; i >= 0; --i) {
        a[i] = static_cast<Code>(c % q);
        c /= q;
      }
      if (weierstrass_discriminant(*field, a) != 0) {
        out.emplace_back(field, a);
        break;
      }
    }
  }
  return out;
}

namespace {

std::vector<ZSumReport> reports_for(const Curve& curve, std::uint64_t index_bound, std::uint64_t budget) {
  const std::uint64_t n = curve.count_points(budget);
  std::vector<ZSumReport> out;
  std::vector<std::vector<Point>> seen;
  for (std::uint64_t m = 1; m <= n; ++m) {
    auto g = subgroup_by_multiplier(curve, m, budget);
    if (n / g.size() > index_bound) continue;
    if (std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
    seen.push_back(std::move(g));
    out.push_back(zsum_report(curve, m, budget));
  }
  return out;
}

}  // namespace

std::vector<ZSumReport> zsum_scan(const FieldPtr& field, std::uint64_t index_bound, const ZSumOptions& options) {
  const auto curves = zsum_sample(field, options.sample_size);
  std::vector<std::vector<ZSumReport>> per_curve(curves.size());
  if (options.threads <= 1) {
    for (std::size_t i = 0; i < curves.size(); ++i) per_curve[i] = reports_for(curves[i], index_bound, options.budget);
  } else {
    std::vector<std::future<std::vector<ZSumReport>>> jobs;
    for (std::size_t start = 0; start < curves.size(); start += options.threads) {
      jobs.clear();
      const std::size_t stop = std::min(curves.size(), start + options.threads);
      for (std::size_t i = start; i < stop; ++i)
        jobs.push_back(std::async(std::launch::async, reports_for, std::cref(curves[i]), index_bound, options.budget));
      for (std::size_t i = start; i < stop; ++i) per_curve[i] = jobs[i - start].get();
    }
  }
  std::vector<ZSumReport> out;
  for (auto& v : per_curve)
    for (auto& r : v) out.push_back(std::move(r));
  return out;
}

ZSumSummary summarize(const std::vector<ZSumReport>& reports) {
  ZSumSummary s;
  std::map<std::uint64_t, ZSumSummary::PerField> by_q;
  std::map<std::uint64_t, std::vector<std::string>> curves_by_q;
  for (const auto& r : reports) {
    auto& pf = by_q[r.q];
    pf.q = r.q;
    auto& names = curves_by_q[r.q];
    if (std::find(names.begin(), names.end(), r.curve) == names.end()) {
      names.push_back(r.curve);
      ++pf.curves;
    }
    if (r.index == 1 && r.covered) ++pf.covered_full_group;
    if (r.covered && r.index >= 1 && r.index <= 3) {
      auto& slot = s.first_covering[r.index - 1];
      if (!slot || r.q < *slot) slot = r.q;
    }
  }
  for (auto& [q, pf] : by_q) s.fields.push_back(pf);
  return s;
}

}  // namespace fgf
