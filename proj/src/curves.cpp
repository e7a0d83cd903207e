#include "fgf/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "fgf/sexp.hpp"

namespace fgf {

Code weierstrass_discriminant(const Field& f, const std::array<Code, 5>& a) {
  const auto [a1, a2, a3, a4, a6] = a;
  auto k = [&](std::int64_t n) { return f.from_integer(n); };
  auto m = [&](Code x, Code y) { return f.mul(x, y); };
  auto ad = [&](Code x, Code y) { return f.add(x, y); };
  auto sb = [&](Code x, Code y) { return f.sub(x, y); };

  const Code b2 = ad(m(a1, a1), m(k(4), a2));
  const Code b4 = ad(m(k(2), a4), m(a1, a3));
  const Code b6 = ad(m(a3, a3), m(k(4), a6));
  const Code b8 = sb(ad(ad(m(m(a1, a1), a6), m(k(4), m(a2, a6))), sb(m(a2, m(a3, a3)), m(a1, m(a3, a4)))),
                     m(a4, a4));
  // -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6
  Code d = f.neg(m(m(b2, b2), b8));
  d = sb(d, m(k(8), m(b4, m(b4, b4))));
  d = sb(d, m(k(27), m(b6, b6)));
  d = ad(d, m(k(9), m(b2, m(b4, b6))));
  return d;
}

Curve::Curve(FieldPtr field, std::array<Code, 5> a) : field_(std::move(field)), a_(a) {
  if (!field_) throw Error(ErrorCode::InvalidArgument, "curve over a null field");
  for (Code c : a_)
    if (!field_->valid(c)) throw Error(ErrorCode::InvalidArgument, "coefficient not in field");
  disc_ = weierstrass_discriminant(*field_, a_);
  if (disc_ == 0) throw Error(ErrorCode::SingularCurve, "discriminant vanishes for " + spec());
}

Curve Curve::from_elems(const Elem& a1, const Elem& a2, const Elem& a3, const Elem& a4,
                        const Elem& a6) {
  for (const Elem* e : {&a2, &a3, &a4, &a6})
    if (!e->field()->same_as(*a1.field()))
      throw Error(ErrorCode::FieldMismatch, "curve coefficients from different fields");
  return Curve(a1.field(), {a1.code(), a2.code(), a3.code(), a4.code(), a6.code()});
}

Curve Curve::short_form(FieldPtr field, Code a, Code b) {
  return Curve(std::move(field), {0, 0, 0, a, b});
}

bool Curve::contains(const Point& p) const noexcept {
  if (p.infinity) return true;
  const Field& f = *field_;
  if (!f.valid(p.x) || !f.valid(p.y)) return false;
  const Code x = p.x, y = p.y;
  const Code lhs = f.mul(y, f.add(y, f.add(f.mul(a1(), x), a3())));
  const Code x2 = f.mul(x, x);
  const Code rhs = f.add(f.add(f.mul(x2, f.add(x, a2())), f.mul(a4(), x)), a6());
  return lhs == rhs;
}

void Curve::require_on_curve(const Point& p) const {
  if (!contains(p)) throw Error(ErrorCode::CurveMismatch, "point is not on " + describe());
}

Point Curve::neg_unchecked(const Point& p) const noexcept {
  if (p.infinity) return p;
  const Field& f = *field_;
  return Point::affine(p.x, f.sub(f.neg(p.y), f.add(f.mul(a1(), p.x), a3())));
}

Point Curve::add_unchecked(const Point& p, const Point& q) const noexcept {
  if (p.infinity) return q;
  if (q.infinity) return p;
  const Field& f = *field_;
  Code lambda;
  if (p.x == q.x) {
    // q = -p, including 2-torsion doubling
    const Code s = f.add(f.add(p.y, q.y), f.add(f.mul(a1(), q.x), a3()));
    if (s == 0) return Point::at_infinity();
    const Code x2 = f.mul(p.x, p.x);
    const Code num = f.sub(f.add(f.add(f.mul(f.from_integer(3), x2), f.mul(f.from_integer(2), f.mul(a2(), p.x))), a4()),
                           f.mul(a1(), p.y));
    const Code den = f.add(f.add(f.mul(f.from_integer(2), p.y), f.mul(a1(), p.x)), a3());
    lambda = f.div(num, den);
  } else {
    lambda = f.div(f.sub(q.y, p.y), f.sub(q.x, p.x));
  }
  const Code nu = f.sub(p.y, f.mul(lambda, p.x));
  const Code x3 = f.sub(f.sub(f.sub(f.add(f.mul(lambda, lambda), f.mul(a1(), lambda)), a2()), p.x), q.x);
  const Code y3 = f.sub(f.sub(f.neg(f.mul(f.add(lambda, a1()), x3)), nu), a3());
  return Point::affine(x3, y3);
}

Point Curve::mul_unchecked(std::int64_t n, const Point& p) const noexcept {
  Point base = n < 0 ? neg_unchecked(p) : p;
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  Point acc = Point::at_infinity();
  while (k) {
    if (k & 1) acc = add_unchecked(acc, base);
    k >>= 1;
    if (k) base = add_unchecked(base, base);
  }
  return acc;
}

Point Curve::add(const Point& p, const Point& q) const {
  require_on_curve(p);
  require_on_curve(q);
  return add_unchecked(p, q);
}

Point Curve::neg(const Point& p) const {
  require_on_curve(p);
  return neg_unchecked(p);
}

Point Curve::mul(std::int64_t n, const Point& p) const {
  require_on_curve(p);
  return mul_unchecked(n, p);
}

std::vector<Point> Curve::points(std::uint64_t budget) const {
  const Field& f = *field_;
  const std::uint32_t q = f.order();
  if (q > budget) throw Error(ErrorCode::BudgetExceeded, "point enumeration over " + f.name());
  constexpr Code kNone = std::numeric_limits<Code>::max();

  // root_of[v] = some y with y^2 = v (odd p, and p = 2 when b = 0);
  // as_root[c] = some w with w^2 + w = c (p = 2).
  std::vector<Code> root_of(q, kNone), as_root;
  for (Code y = 0; y < q; ++y) {
    Code s = f.mul(y, y);
    if (root_of[s] == kNone) root_of[s] = y;
  }
  if (f.characteristic() == 2) {
    as_root.assign(q, kNone);
    for (Code w = 0; w < q; ++w) {
      Code c = f.add(f.mul(w, w), w);
      if (as_root[c] == kNone) as_root[c] = w;
    }
  }
  const Code two_inv = f.characteristic() == 2 ? 0 : f.inv(f.from_integer(2));
  const Code four = f.from_integer(4);

  std::vector<Point> out{Point::at_infinity()};
  for (Code x = 0; x < q; ++x) {
    const Code x2 = f.mul(x, x);
    const Code rhs = f.add(f.add(f.mul(x2, f.add(x, a2())), f.mul(a4(), x)), a6());
    const Code b = f.add(f.mul(a1(), x), a3());
    Code ys[2];
    int count = 0;
    if (f.characteristic() != 2) {
      // (2y + b)^2 = 4 rhs + b^2
      const Code disc = f.add(f.mul(four, rhs), f.mul(b, b));
      const Code s = root_of[disc];
      if (s != kNone) {
        ys[count++] = f.mul(f.sub(s, b), two_inv);
        if (s != 0) ys[count++] = f.mul(f.sub(f.neg(s), b), two_inv);
      }
    } else if (b == 0) {
      ys[count++] = root_of[rhs];
    } else {
      // y = b w with w^2 + w = rhs / b^2
      const Code c = f.div(rhs, f.mul(b, b));
      const Code w = as_root[c];
      if (w != kNone) {
        ys[count++] = f.mul(b, w);
        ys[count++] = f.mul(b, f.add(w, 1));
      }
    }
    if (count == 2 && ys[1] < ys[0]) std::swap(ys[0], ys[1]);
    for (int i = 0; i < count; ++i) out.push_back(Point::affine(x, ys[i]));
  }
  return out;
}

std::uint64_t Curve::count_points(std::uint64_t budget) const { return points(budget).size(); }

Curve Curve::base_change(const FieldPtr& extension) const {
  if (!extension || !extension->has_subfield(*field_))
    throw Error(ErrorCode::FieldMismatch, "base change target does not contain " + field_->name());
  return Curve(extension, a_);
}

std::string Curve::spec() const {
  std::string out;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) out += ',';
    out += field_->format(a_[i]);
  }
  return out;
}

std::string Curve::describe() const { return "E[" + spec() + "] over " + field_->name(); }

Curve parse_curve_spec(const FieldPtr& field, std::string_view spec) {
  std::array<Code, 5> a{};
  std::size_t start = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    std::size_t end = spec.find(',', start);
    if ((end == std::string_view::npos) != (i == 4))
      throw Error(ErrorCode::ParseError, "curve spec needs five comma-separated coefficients");
    if (end == std::string_view::npos) end = spec.size();
    a[i] = field->parse(spec.substr(start, end - start));
    start = end + 1;
  }
  return Curve(field, a);
}

FrobeniusData frobenius_data(std::uint32_t p, std::uint64_t q, std::int64_t t) {
  FrobeniusData fd;
  fd.p = p;
  fd.q = q;
  fd.t = t;
  fd.n1 = static_cast<std::uint64_t>(static_cast<std::int64_t>(q) + 1 - t);
  fd.ordinary = t % static_cast<std::int64_t>(p) != 0;
  return fd;
}

FrobeniusData frobenius_trace(const Curve& curve, std::uint64_t budget) {
  const Field& f = *curve.field();
  const std::uint64_t n1 = curve.count_points(budget);
  const std::int64_t t = static_cast<std::int64_t>(f.order()) + 1 - static_cast<std::int64_t>(n1);
  return frobenius_data(f.characteristic(), f.order(), t);
}

mpz_class trace_power(const FrobeniusData& fd, unsigned ell) {
  if (ell == 0) return 2;
  const mpz_class t = static_cast<long>(fd.t);
  const mpz_class q = static_cast<unsigned long>(fd.q);
  mpz_class prev = 2, cur = t;  // t_0, t_1
  for (unsigned j = 1; j < ell; ++j) {
    mpz_class next = t * cur - q * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

mpz_class count_over_extension(const FrobeniusData& fd, unsigned ell) {
  if (ell == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
  mpz_class qell;
  mpz_ui_pow_ui(qell.get_mpz_t(), fd.q, ell);
  return qell + 1 - trace_power(fd, ell);
}

Point frobenius_endo(const Curve& curve, const Point& p, const Field& relative_to) {
  const Field& f = *curve.field();
  if (!f.has_subfield(relative_to))
    throw Error(ErrorCode::FieldMismatch, relative_to.name() + " is not below " + f.name());
  const std::int64_t qq = relative_to.order();
  for (Code c : curve.coefficients())
    if (f.pow(c, qq) != c)
      throw Error(ErrorCode::FieldMismatch, "curve coefficients do not lie in " + relative_to.name());
  if (!curve.contains(p)) throw Error(ErrorCode::CurveMismatch, "point is not on " + curve.describe());
  if (p.infinity) return p;
  return Point::affine(f.pow(p.x, qq), f.pow(p.y, qq));
}

Curve find_ordinary_curve(const FieldPtr& field, std::uint64_t candidate_budget) {
  const Field& f = *field;
  const std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (int i = 0; i < 5 && total <= candidate_budget; ++i) total *= q;
  const std::uint64_t limit = std::min(total, candidate_budget);

  std::optional<Curve> first_ordinary;
  for (std::uint64_t idx = 0; idx < limit; ++idx) {
    std::array<Code, 5> a{};
    std::uint64_t r = idx;
    for (int i = 4; i >= 0; --i) {
      a[i] = static_cast<Code>(r % q);
      r /= q;
    }
    if (weierstrass_discriminant(f, a) == 0) continue;
    Curve c(field, a);
    const FrobeniusData fd = frobenius_trace(c);
    if (!fd.ordinary) continue;
    if (fd.t == 1) return c;
    if (!first_ordinary) first_ordinary = c;
  }
  if (first_ordinary) return *first_ordinary;
  throw Error(ErrorCode::SearchExhausted, "no ordinary curve among scanned coefficients of " + f.name());
}

Curve quadratic_twist(const Curve& curve, Code u) {
  const Field& f = *curve.field();
  if (f.characteristic() == 2) throw Error(ErrorCode::CharTwo, "quadratic twists need odd characteristic");
  if (!curve.is_short_form())
    throw Error(ErrorCode::InvalidArgument, "twist expects a short form y^2 = x^3 + ax + b");
  if (!f.valid(u)) throw Error(ErrorCode::FieldMismatch, "twist parameter not in " + f.name());
  const Code fu = f.add(f.add(f.pow(u, 3), f.mul(curve.a4(), u)), curve.a6());
  if (fu == 0) throw Error(ErrorCode::TwistDegenerate, "f(u) = 0");
  const Code fu2 = f.mul(fu, fu);
  return Curve::short_form(curve.field(), f.mul(curve.a4(), fu2), f.mul(curve.a6(), f.mul(fu2, fu)));
}

Code z_coord(const Curve& curve, const Point& p) {
  if (p.infinity) throw Error(ErrorCode::PoleOfZ, "z = y/x has a pole at O");
  if (p.x == 0) throw Error(ErrorCode::PoleOfZ, "z = y/x has a pole where x = 0");
  if (!curve.contains(p)) throw Error(ErrorCode::CurveMismatch, "point is not on " + curve.describe());
  return curve.field()->div(p.y, p.x);
}

}  // namespace fgf
