#include "fgf/modgen.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace fgf {

namespace {

struct Ambient {
  Curve base;
  Curve lifted;
  FieldPtr ext;
  std::uint64_t q;
  std::vector<Point> points;
  std::unordered_map<std::uint64_t, std::uint32_t> index;

  Ambient(const Curve& curve, const FieldPtr& extension, std::uint64_t budget)
      : base(curve), lifted(curve.base_change(extension)), ext(extension), q(curve.field()->order()) {
    if (!(extension->same_as(*curve.field()) ||
          (extension->base() && extension->base()->same_as(*curve.field()))))
      throw Error(ErrorCode::FieldMismatch, "extension must be built directly over " + curve.field()->name());
    points = lifted.points(budget);
    index.reserve(points.size() * 2);
    for (std::uint32_t i = 0; i < points.size(); ++i) index.emplace(point_key(points[i]), i);
  }

  // Points of E(F_q) keep their codes in the extension.
  bool is_rational(const Point& p) const { return p.infinity || (p.x < q && p.y < q); }

  Point frob(const Point& p) const {
    if (p.infinity) return p;
    const Field& f = *ext;
    return Point::affine(f.pow(p.x, static_cast<std::int64_t>(q)), f.pow(p.y, static_cast<std::int64_t>(q)));
  }
};

struct ExtraAuto {
  std::string name;
  std::function<Point(const Point&)> apply;
};

// Automorphisms of order 3 or 4 defined over F_q on short models with j = 0
// or j = 1728 (characteristic at least 5).
std::optional<ExtraAuto> extra_automorphism(const Curve& base, const FieldPtr& ext) {
  const Field& f = *base.field();
  if (f.characteristic() < 5 || !base.is_short_form()) return std::nullopt;
  const std::uint32_t q = f.order();
  const Field& big = *ext;
  if (base.a4() == 0 && (q - 1) % 3 == 0) {
    const Code omega = f.pow(f.generator(), (q - 1) / 3);
    return ExtraAuto{"Z[F,zeta3]", [&big, omega](const Point& p) {
                       return p.infinity ? p : Point::affine(big.mul(omega, p.x), p.y);
                     }};
  }
  if (base.a6() == 0 && (q - 1) % 4 == 0) {
    const Code iota = f.pow(f.generator(), (q - 1) / 4);
    return ExtraAuto{"Z[F,i]", [&big, iota](const Point& p) {
                       return p.infinity ? p : Point::affine(big.neg(p.x), big.mul(iota, p.y));
                     }};
  }
  return std::nullopt;
}

// Grows `members` into the subgroup generated by it and g.
void adjoin(const Curve& e, std::vector<Point>& members, std::unordered_set<std::uint64_t>& keys,
            const Point& g) {
  if (keys.count(point_key(g))) return;
  std::vector<Point> shifts;
  Point step = g;
  while (!keys.count(point_key(step))) {
    shifts.push_back(step);
    step = e.add_unchecked(step, g);
  }
  const std::size_t old = members.size();
  for (const Point& s : shifts)
    for (std::size_t i = 0; i < old; ++i) {
      Point r = e.add_unchecked(members[i], s);
      if (keys.insert(point_key(r)).second) members.push_back(r);
    }
}

std::vector<Point> closure(const Ambient& amb, const Point& p, const ExtraAuto* sigma = nullptr) {
  const Curve& e = amb.lifted;
  std::vector<Point> members{Point::at_infinity()};
  std::unordered_set<std::uint64_t> keys{point_key(members[0])};
  std::vector<Point> gens;
  for (const Point& r : amb.points)
    if (amb.is_rational(r) && !r.infinity) gens.push_back(r);
  Point fp = p;
  const unsigned ell = std::max(1u, amb.ext->same_as(*amb.base.field()) ? 1u : amb.ext->degree());
  for (unsigned i = 0; i < ell; ++i) {
    gens.push_back(fp);
    if (sigma) gens.push_back(sigma->apply(fp));
    fp = amb.frob(fp);
  }
  for (const Point& g : gens) adjoin(e, members, keys, g);

  // A finite set holding O and stable under adding each generator is the
  // subgroup they generate.
  auto require = [&keys](const Point& r, const char* what) {
    if (!keys.count(point_key(r))) throw std::logic_error(std::string("submodule not closed under ") + what);
  };
  for (const Point& m : members) {
    for (const Point& g : gens) require(e.add_unchecked(m, g), "addition");
    require(e.neg_unchecked(m), "negation");
    require(amb.frob(m), "Frobenius");
    if (sigma) require(sigma->apply(m), "the extra automorphism");
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::uint64_t point_order(const Curve& e, const Point& p, std::uint64_t group_order,
                          const std::vector<std::uint64_t>& primes) {
  std::uint64_t ord = group_order;
  for (std::uint64_t r : primes)
    while (ord % r == 0 && e.mul_unchecked(static_cast<std::int64_t>(ord / r), p).infinity) ord /= r;
  return ord;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Sublattice of Z^2 in Hermite form with rows (a, b) and (0, c).
struct Lattice2 {
  std::int64_t a, b, c;

  void insert(std::int64_t x, std::int64_t y) {
    y %= c;
    if (x == 0) {
      c = std::gcd(c, y);
      b %= c;
      return;
    }
    std::int64_t u = 1, v = 0, g = a, u1 = 0, v1 = 1, g1 = x;
    while (g1 != 0) {
      const std::int64_t k = g / g1;
      std::tie(g, g1) = std::make_pair(g1, g - k * g1);
      std::tie(u, u1) = std::make_pair(u1, u - k * u1);
      std::tie(v, v1) = std::make_pair(v1, v - k * v1);
    }
    const std::int64_t z = (x / g) % c * b - (a / g) % c * y;
    c = std::gcd(c, std::abs(z % c));
    a = g;
    b = ((u % c) * b + (v % c) * y) % c;
    if (b < 0) b += c;
  }

  std::int64_t index() const { return a * c; }
};

}  // namespace

std::vector<Point> frobenius_submodule(const Curve& curve, const FieldPtr& extension, const Point& p,
                                       std::uint64_t budget) {
  Ambient amb(curve, extension, budget);
  if (!amb.lifted.contains(p)) throw Error(ErrorCode::CurveMismatch, "point is not on the base-changed curve");
  return closure(amb, p);
}

GenerationReport generation_fraction(const Curve& curve, unsigned ell, GenerationMethod method,
                                     std::uint64_t budget) {
  if (ell == 0) throw Error(ErrorCode::InvalidArgument, "ell must be positive");
  const FrobeniusData fd = frobenius_trace(curve, budget);
  if (!fd.ordinary) throw Error(ErrorCode::NotOrdinary, curve.describe() + " is supersingular");
  FieldPtr ext = make_extension(curve.field(), ell, std::nullopt, budget);
  Ambient amb(curve, ext, budget);

  GenerationReport rep;
  rep.q = fd.q;
  rep.ell = ell;
  rep.total = amb.points.size();
  if (rep.total % fd.n1 != 0) throw std::logic_error("#E(F_q) does not divide #E(F_q^ell)");
  rep.n = static_cast<unsigned long>(rep.total / fd.n1);
  rep.psi = psi(rep.n);
  rep.bound = 1 - 2 * rep.psi;
  rep.bound.canonicalize();

  const Curve& e = amb.lifted;
  const std::uint64_t total = rep.total;
  const auto primes = prime_divisors(total);

  // Basis P1, Q with E = <P1> + <Q>, ord P1 = n1, ord Q = n2.
  Point p1 = Point::at_infinity();
  std::uint64_t n1 = 1;
  for (const Point& r : amb.points) {
    const std::uint64_t o = point_order(e, r, total, primes);
    if (o > n1) {
      n1 = o;
      p1 = r;
      if (n1 == total) break;
    }
  }
  const std::uint64_t n2 = total / n1;
  rep.n1 = n1;
  rep.n2 = n2;

  std::vector<std::uint32_t> dlog_p1(amb.points.size(), UINT32_MAX);
  {
    Point cur = Point::at_infinity();
    for (std::uint64_t k = 0; k < n1; ++k) {
      dlog_p1[amb.index.at(point_key(cur))] = static_cast<std::uint32_t>(k);
      cur = e.add_unchecked(cur, p1);
    }
  }
  Point qgen = Point::at_infinity();
  if (n2 > 1) {
    bool found = false;
    for (const Point& r : amb.points) {
      Point cur = r;
      std::uint64_t k = 1;
      while (dlog_p1[amb.index.at(point_key(cur))] == UINT32_MAX) {
        cur = e.add_unchecked(cur, r);
        ++k;
      }
      if (k != n2) continue;
      const std::uint64_t m = dlog_p1[amb.index.at(point_key(cur))];
      qgen = e.add_unchecked(r, e.mul_unchecked(-static_cast<std::int64_t>(m / n2), p1));
      found = true;
      break;
    }
    if (!found) throw std::logic_error("no complement to a maximal cyclic subgroup");
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> coord(amb.points.size(), {-1, -1});
  {
    Point row = Point::at_infinity();
    for (std::uint64_t bq = 0; bq < n2; ++bq) {
      Point cur = row;
      for (std::uint64_t ap = 0; ap < n1; ++ap) {
        auto& slot = coord[amb.index.at(point_key(cur))];
        if (slot.first >= 0) throw std::logic_error("basis does not split the group");
        slot = {static_cast<std::int64_t>(ap), static_cast<std::int64_t>(bq)};
        cur = e.add_unchecked(cur, p1);
      }
      row = e.add_unchecked(row, qgen);
    }
  }
  auto coords_of = [&](const Point& r) { return coord[amb.index.at(point_key(r))]; };
  const auto [m11, m21] = coords_of(amb.frob(p1));
  const auto [m12, m22] = coords_of(amb.frob(qgen));
  const std::optional<ExtraAuto> sigma = extra_automorphism(curve, ext);
  std::int64_t s11 = 1, s21 = 0, s12 = 0, s22 = 1;
  if (sigma) {
    std::tie(s11, s21) = coords_of(sigma->apply(p1));
    std::tie(s12, s22) = coords_of(sigma->apply(qgen));
    rep.ring = sigma->name;
  }

  const auto n1s = static_cast<std::int64_t>(n1);
  const auto n2s = static_cast<std::int64_t>(n2);
  Lattice2 rational{n1s, 0, n2s};
  for (const Point& r : amb.points)
    if (amb.is_rational(r)) {
      const auto [x, y] = coords_of(r);
      rational.insert(x, y);
    }

  std::uint64_t good = 0, good_frob = 0;
  if (method == GenerationMethod::Lattice) {
    for (const Point& r : amb.points) {
      const auto [x, y] = coords_of(r);
      const std::int64_t fx = (x * m11 + y * m12) % n1s, fy = (x * m21 + y * m22) % n2s;
      Lattice2 lat = rational;
      lat.insert(x, y);
      lat.insert(fx, fy);
      if (lat.index() == 1) ++good_frob;
      if (sigma) {
        lat.insert((x * s11 + y * s12) % n1s, (x * s21 + y * s22) % n2s);
        lat.insert((fx * s11 + fy * s12) % n1s, (fx * s21 + fy * s22) % n2s);
      }
      if (lat.index() == 1) ++good;
    }
  } else {
    for (const Point& r : amb.points) {
      if (closure(amb, r).size() == total) ++good_frob;
      if (closure(amb, r, sigma ? &*sigma : nullptr).size() == total) ++good;
    }
  }

  rep.generating_frobenius = good_frob;
  rep.generating = good;
  rep.fraction = mpq_class(static_cast<unsigned long>(good), static_cast<unsigned long>(total));
  rep.fraction.canonicalize();
  rep.pass = rep.fraction >= rep.bound;
  rep.end_ring_caveat = !rep.pass;
  return rep;
}

}  // namespace fgf
