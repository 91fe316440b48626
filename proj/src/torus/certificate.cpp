#include "skein/certificate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace skein {
namespace {

std::int64_t abs_det(const Vec2& x, const Vec2& y) { return std::llabs(det(x, y)); }

// (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
struct ExtGcd {
  std::int64_t g, s, t;
};

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_primitive(const Vec2& x) { return content(x) == 1; }

// Shapes up to sign of each vector and order of the pair.
bool matches_shape(BaseKind kind, const Vec2& gx, const Vec2& gy) {
  if (gx.is_zero() || gy.is_zero()) return false;
  const CurveClass cx = CurveClass::canonicalize(gx);
  const CurveClass cy = CurveClass::canonicalize(gy);
  const CurveClass unit = CurveClass::canonicalize(1, 0);
  auto other_ok = [kind](const CurveClass& c) {
    if (kind == BaseKind::rel1) return c.a() == 0 && c.b() >= 1;
    return c.a() == 1 && c.b() >= 1;
  };
  return (cx == unit && other_ok(cy)) || (cy == unit && other_ok(cx));
}

class Builder {
 public:
  Certificate build(const Vec2& x, const Vec2& y) {
    const auto key = std::pair{x, y};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Certificate c = build_uncached(x, y);
    memo_.emplace(key, c);
    return c;
  }

 private:
  Certificate base(const Vec2& x, const Vec2& y, BaseKind kind, const GL2Matrix& g) {
    return Certificate{x, y, BaseNode{kind, g}};
  }

  Certificate build_uncached(const Vec2& x, const Vec2& y) {
    if (abs_det(x, y) <= 1) return base(x, y, BaseKind::unit_det, GL2Matrix::identity());

    const NormalPosition np = normal_position(x, y);
    const std::int64_t p = np.x.a, q = np.x.b, r = np.y.b;
    const std::int64_t g = content(np.x);

    if (p == 1) return base(x, y, BaseKind::rel1, np.gl2);

    Vec2 a, b;
    if (q == 0) {
      // x = (p,0) with p = d(x) <= r.  r = 1 would force p = 1.
      a = {1, -1};
      b = {p - 1, 1};
    } else if (g == 1) {
      if (r == 1 && q == p - 1) {
        // (p, p-1), (0, 1)  ->  (1, p), (-1, 0)
        return base(x, y, BaseKind::rel2, GL2Matrix(1, -1, 1, 0) * np.gl2);
      }
      const auto [u, v, w, z] = diophantine_split(p, q);
      a = {u, v};
      b = {w, z};
    } else {
      const std::int64_t pp = p / g, qq = q / g;
      const auto [u, v, w, z] = diophantine_split(pp, qq);
      a = Vec2{u, v} * g;
      b = Vec2{w, z} * g;
      const bool subcase_1a = u + 1 < pp;
      const bool subcase_1b_strict = !subcase_1a && abs_det(np.y + b, a) < p * r;
      if (!subcase_1a && !subcase_1b_strict) {
        // Subcase 1c: x = (r p', r p' - r).
        if (g != r || qq != pp - 1) throw InternalError("certificate: unexpected shape in subcase 1c");
        a = {1, -1};
        b = {r * pp - 1, r * pp - r + 1};
      }
    }

    SplitNode split{np.gl2, np.swapped, np.x, np.y, a, b, {}};
    const Vec2& ny = np.y;
    const std::pair<Vec2, Vec2> pairs[6] = {{a, b}, {ny, a}, {ny, b}, {ny + a, b}, {ny + b, a}, {a - b, ny}};
    split.children.reserve(6);
    for (const auto& [cx, cy] : pairs) split.children.push_back(build(cx, cy));
    return Certificate{x, y, std::move(split)};
  }

  std::map<std::pair<Vec2, Vec2>, Certificate> memo_;
};

ValidationResult fail(const std::string& path, std::string reason) { return {false, path, std::move(reason)}; }

ValidationResult check_node(const Certificate& c, const std::string& path) {
  if (const auto* base = std::get_if<BaseNode>(&c.node)) {
    if (base->kind == BaseKind::unit_det) {
      if (abs_det(c.x, c.y) > 1) return fail(path, "unit-det base with |det| > 1");
      return {};
    }
    if (c.x.is_zero() || c.y.is_zero()) return fail(path, "zero vector in relation base");
    if (!matches_shape(base->kind, base->gl2.apply(c.x), base->gl2.apply(c.y)))
      return fail(path, "base pair does not match " + to_string(base->kind));
    return {};
  }

  const auto& s = std::get<SplitNode>(c.node);
  if (c.x.is_zero() || c.y.is_zero()) return fail(path, "zero vector in split");
  const Vec2 gx = s.gl2.apply(s.swapped ? c.y : c.x);
  const Vec2 gy = s.gl2.apply(s.swapped ? c.x : c.y);
  if (gx != s.x || gy != s.y) return fail(path, "normalized pair is not the GL2 image of the pair");
  if (s.a + s.b != s.x) return fail(path, "a + b != x");
  if (det(s.a, s.b) == 0) return fail(path, "d(a,b) = 0");
  if (s.children.size() != 6) return fail(path, "split needs six children");

  const Vec2& y = s.y;
  const std::pair<Vec2, Vec2> expected[6] = {{s.a, s.b},   {y, s.a},     {y, s.b},
                                             {y + s.a, s.b}, {y + s.b, s.a}, {s.a - s.b, y}};
  const std::int64_t parent_det = abs_det(s.x, s.y);
  const bool parent_primitive = is_primitive(s.x) || is_primitive(s.y);
  for (std::size_t i = 0; i < 6; ++i) {
    const Certificate& child = s.children[i];
    const std::string child_path = path + "/" + std::to_string(i);
    if (child.x != expected[i].first || child.y != expected[i].second)
      return fail(child_path, "child pair differs from the split's pair");
    const std::int64_t child_det = abs_det(child.x, child.y);
    const bool child_primitive = is_primitive(child.x) || is_primitive(child.y);
    const bool descends = child_det < parent_det || (child_det == parent_det && child_primitive && !parent_primitive);
    if (!descends) return fail(child_path, "child does not descend: |det| " + std::to_string(child_det) +
                                               " vs parent " + std::to_string(parent_det));
    if (auto r = check_node(child, child_path); !r) return r;
  }
  return {};
}

}  // namespace

std::string to_string(BaseKind k) {
  switch (k) {
    case BaseKind::rel1:
      return "rel1";
    case BaseKind::rel2:
      return "rel2";
    case BaseKind::unit_det:
      return "unit-det";
  }
  return "?";
}

BaseKind base_kind_from_string(const std::string& s) {
  if (s == "rel1") return BaseKind::rel1;
  if (s == "rel2") return BaseKind::rel2;
  if (s == "unit-det") return BaseKind::unit_det;
  throw DomainError("unknown base kind '" + s + "'");
}

DiophantineSplit diophantine_split(std::int64_t p, std::int64_t q) {
  if (!(p > 1 && 0 < q && q < p && std::gcd(p, q) == 1))
    throw DomainError("diophantine_split requires gcd(p,q) = 1 and 0 < q < p, p > 1");
  // b q - a p = 1, shifted so 0 <= b < p.
  const ExtGcd e = ext_gcd(q, p);
  std::int64_t b = e.s, a = -e.t;
  const std::int64_t k = floor_div(b, p);
  b -= k * p;
  a -= k * q;
  return {b, a, p - b, q - a};
}

NormalPosition normal_position(const Vec2& x0, const Vec2& y0) {
  if (det(x0, y0) == 0) throw DomainError("normal_position requires det(x,y) != 0");
  NormalPosition np;
  np.swapped = content(x0) > content(y0);
  const Vec2 x = np.swapped ? y0 : x0;
  const Vec2 y = np.swapped ? x0 : y0;

  const std::int64_t r = content(y);
  const Vec2 prim{y.a / r, y.b / r};
  const ExtGcd e = ext_gcd(prim.a, prim.b);  // e.s * a + e.t * b = 1
  GL2Matrix g(prim.b, -prim.a, e.s, e.t);     // prim -> (0, 1)
  if (g.apply(x).a < 0) g = GL2Matrix(-1, 0, 0, 1) * g;
  const Vec2 gx = g.apply(x);
  g = GL2Matrix(1, 0, -floor_div(gx.b, gx.a), 1) * g;

  np.gl2 = g;
  np.x = g.apply(x);
  np.y = g.apply(y);
  return np;
}

Certificate build_certificate(const Vec2& x, const Vec2& y) {
  if (x.is_zero() || y.is_zero()) throw DomainError("build_certificate requires nonzero vectors");
  Builder builder;
  return builder.build(x, y);
}

ValidationResult check_certificate(const Certificate& c) { return check_node(c, "root"); }

bool strictly_decreasing(const Certificate& c) {
  const auto* s = std::get_if<SplitNode>(&c.node);
  if (!s) return true;
  const std::int64_t d = abs_det(c.x, c.y);
  for (const auto& child : s->children)
    if (abs_det(child.x, child.y) >= d || !strictly_decreasing(child)) return false;
  return true;
}

std::size_t depth(const Certificate& c) {
  const auto* s = std::get_if<SplitNode>(&c.node);
  if (!s) return 0;
  std::size_t d = 0;
  for (const auto& child : s->children) d = std::max(d, depth(child));
  return d + 1;
}

std::size_t node_count(const Certificate& c) {
  const auto* s = std::get_if<SplitNode>(&c.node);
  if (!s) return 1;
  std::size_t n = 1;
  for (const auto& child : s->children) n += node_count(child);
  return n;
}

namespace {

// Adds c*D_z, failing if z = 0 carries a nonzero coefficient.
bool add_generator(SkeinElement& e, const Vec2& z, const RatFunc& c) {
  if (z.is_zero()) return c.is_zero();
  e.add_term({CurveClass::canonicalize(z)}, c);
  return true;
}

RatFunc brace(std::int64_t n) { return qint(static_cast<int>(n)); }

}  // namespace

bool coefficient_collapse_check(const Vec2& a, const Vec2& b, const Vec2& y) {
  const Vec2 x = a + b;
  if (a.is_zero() || b.is_zero() || y.is_zero() || x.is_zero())
    throw DomainError("coefficient_collapse_check requires nonzero a, b, y and a + b");

  const RatFunc ya = brace(det(y, a)), by = brace(det(b, y));
  const RatFunc c1 = ya * brace(det(y + a, b)) + by * brace(det(b + y, a));
  const RatFunc c2 = ya * brace(det(y - a, b)) - by * brace(det(b - y, a));
  const RatFunc c3 = ya * brace(det(y + a, b)) - by * brace(det(b - y, a));
  const RatFunc c4 = ya * brace(det(y - a, b)) + by * brace(det(b + y, a));

  const RatFunc dab = brace(det(a, b));
  const RatFunc dxy = brace(det(x, y));
  const RatFunc dmy = brace(det(a - b, y));
  if (!(c1 == -(dab * dxy) && c2 == dab * dxy && c3 == -(dab * dmy) && c4 == dab * dmy)) return false;

  SkeinElement lhs, rhs;
  bool ok = add_generator(lhs, x + y, c1) && add_generator(lhs, x - y, c2) &&
            add_generator(lhs, a - b + y, -c3) && add_generator(lhs, a - b - y, -c4);
  ok = ok && add_generator(rhs, x + y, -(dab * dxy)) && add_generator(rhs, x - y, dab * dxy) &&
       add_generator(rhs, a - b + y, dab * dmy) && add_generator(rhs, a - b - y, -(dab * dmy));
  return ok && lhs == rhs;
}

}  // namespace skein
