#include <doctest.h>

#include "skein/certificate.hpp"
#include "skein/json_io.hpp"
#include "skein/prng.hpp"

#include <cstdlib>
#include <numeric>

using namespace skein;

namespace {

std::int64_t adet(const Vec2& x, const Vec2& y) { return std::llabs(det(x, y)); }

SplitNode* first_split(Certificate& c) {
  if (auto* s = std::get_if<SplitNode>(&c.node)) return s;
  return nullptr;
}

}  // namespace

TEST_CASE("diophantine split") {
  const auto d = diophantine_split(5, 3);
  CHECK(d.u == 2);
  CHECK(d.v == 1);
  CHECK(d.w == 3);
  CHECK(d.z == 2);
  const auto e = diophantine_split(2, 1);
  CHECK(e.u == 1);
  CHECK(e.v == 0);
  CHECK(e.w == 1);
  CHECK(e.z == 1);
  CHECK_THROWS_AS(diophantine_split(4, 2), DomainError);
  CHECK_THROWS_AS(diophantine_split(3, 3), DomainError);
  CHECK_THROWS_AS(diophantine_split(1, 0), DomainError);
  for (std::int64_t p = 2; p <= 30; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto s = diophantine_split(p, q);
      CHECK(s.u + s.w == p);
      CHECK(s.v + s.z == q);
      CHECK(s.u > 0);
      CHECK(s.w > 0);
      CHECK(s.u * s.z - s.w * s.v == 1);
    }
}

TEST_CASE("normal position") {
  const NormalPosition n = normal_position({3, 7}, {1, 2});
  CHECK(n.y.a == 0);
  CHECK(n.x.b >= 0);
  CHECK(n.x.b < n.x.a);
  CHECK(adet(n.x, n.y) == 1);
  CHECK(content(n.x) <= content(n.y));
  CHECK_THROWS_AS(normal_position({1, 1}, {2, 2}), DomainError);
}

TEST_CASE("base certificates") {
  const Certificate c = build_certificate({1, 0}, {0, 1});
  CHECK(c.is_base());
  CHECK(std::get<BaseNode>(c.node).kind == BaseKind::unit_det);
  CHECK(validate_certificate(c));
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    Certificate r2{{1, n}, {1, 0}, BaseNode{BaseKind::rel2, GL2Matrix::identity()}};
    // The declared matrix must move the pair onto the rel2 shape; search the
    // small ones rather than trusting the builder.
    bool any = false;
    for (int a = -1; a <= 1 && !any; ++a)
      for (int b = -1; b <= 1 && !any; ++b)
        for (int c2 = -1; c2 <= 1 && !any; ++c2)
          for (int d = -1; d <= 1 && !any; ++d) {
            if (a * d - b * c2 != 1 && a * d - b * c2 != -1) continue;
            std::get<BaseNode>(r2.node).gl2 = GL2Matrix(a, b, c2, d);
            any = validate_certificate(r2);
          }
    CHECK(any);
    const Certificate built = build_certificate({1, n}, {1, 0});
    CHECK(validate_certificate(built));
  }
  // ((2,0),(0,1)) is rel1 up to a swap.
  const Certificate r1 = build_certificate({2, 0}, {0, 1});
  CHECK(r1.is_base());
  CHECK(std::get<BaseNode>(r1.node).kind == BaseKind::rel1);
}

TEST_CASE("diophantine branch of the split") {
  const Certificate c = build_certificate({5, 3}, {0, 2});
  REQUIRE_FALSE(c.is_base());
  const auto& s = std::get<SplitNode>(c.node);
  CHECK(s.x == Vec2{5, 3});
  CHECK(s.y == Vec2{0, 2});
  CHECK(s.a == Vec2{2, 1});
  CHECK(s.b == Vec2{3, 2});
  CHECK(validate_certificate(c));
  for (const auto& k : s.children) CHECK(adet(k.x, k.y) < adet(c.x, c.y));
}

TEST_CASE("sweep: every pair in a box certifies") {
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b)
      for (int c = -5; c <= 5; ++c)
        for (int d = -5; d <= 5; ++d) {
          if ((a == 0 && b == 0) || (c == 0 && d == 0) || a * d - b * c == 0) continue;
          const Certificate cert = build_certificate({a, b}, {c, d});
          const ValidationResult r = check_certificate(cert);
          INFO("pair ", a, ",", b, " ", c, ",", d, ": ", r.path, " ", r.reason);
          REQUIRE(r.ok);
          REQUIRE(depth(cert) <= static_cast<std::size_t>(std::abs(a * d - b * c)));
        }
}

TEST_CASE("degenerate pairs") {
  CHECK_THROWS_AS(build_certificate({0, 0}, {1, 0}), DomainError);
  // det 0: the relation holds trivially, and the certificate is a unit_det-free base.
  CHECK_NOTHROW(build_certificate({2, 0}, {1, 0}));
}

TEST_CASE("strict descent is not always available") {
  // Both vectors imprimitive with |det| = 4: the (y+b, a) child keeps |det|.
  const Certificate c = build_certificate({2, 0}, {0, 2});
  CHECK(validate_certificate(c));
  CHECK_FALSE(strictly_decreasing(c));
  CHECK(strictly_decreasing(build_certificate({5, 3}, {0, 2})));
}

TEST_CASE("tampered certificates are rejected") {
  Certificate c = build_certificate({3, 1}, {0, 2});
  REQUIRE(validate_certificate(c));
  SplitNode* s = first_split(c);
  REQUIRE(s != nullptr);

  SUBCASE("child with the parent's |det|") {
    // x = (x + y) + (-y) keeps the determinant in the (a, b) child.
    s->a = s->x + s->y;
    s->b = -s->y;
    CHECK_FALSE(validate_certificate(c));
  }
  SUBCASE("a + b != x") {
    s->a = s->a + Vec2{1, 0};
    CHECK_FALSE(validate_certificate(c));
  }
  SUBCASE("wrong base kind") {
    for (auto& k : s->children)
      if (auto* b = std::get_if<BaseNode>(&k.node); b && b->kind != BaseKind::unit_det) b->kind = BaseKind::unit_det;
    bool changed = false;
    for (auto& k : s->children)
      if (auto* b = std::get_if<BaseNode>(&k.node); b && adet(k.x, k.y) > 1) changed = true;
    if (changed) CHECK_FALSE(validate_certificate(c));
  }
  SUBCASE("dropped child") {
    s->children.pop_back();
    const ValidationResult r = check_certificate(c);
    CHECK_FALSE(r.ok);
    CHECK(r.path.rfind("root", 0) == 0);
  }
}

TEST_CASE("certificate JSON round trip") {
  for (const auto& [x, y] : std::vector<std::pair<Vec2, Vec2>>{{{5, 3}, {0, 2}}, {{2, 0}, {0, 2}}, {{4, -3}, {1, 5}}}) {
    const Certificate c = build_certificate(x, y);
    const Json j = to_json(c);
    const Certificate back = certificate_from_json(Json::parse(j.dump()));
    CHECK(to_json(back) == j);
    CHECK(validate_certificate(back));
  }
  CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"x":[1,0],"y":[0,1],"kind":"leaf"})")), DomainError);
  CHECK_THROWS_AS(certificate_from_json(Json::parse(R"({"x":[1,0]})")), DomainError);
}

TEST_CASE("coefficient collapse") {
  CHECK(coefficient_collapse_check({1, 0}, {0, 1}, {1, 1}));
  CHECK(coefficient_collapse_check({2, 1}, {2, 1}, {0, 1}));
  SplitMix64 rng(41);
  int done = 0;
  while (done < 100) {
    Vec2 a{rng.uniform(-4, 4), rng.uniform(-4, 4)}, b{rng.uniform(-4, 4), rng.uniform(-4, 4)},
        y{rng.uniform(-4, 4), rng.uniform(-4, 4)};
    if (a.is_zero() || b.is_zero() || y.is_zero() || (a + b).is_zero()) continue;
    CHECK(coefficient_collapse_check(a, b, y));
    ++done;
  }
}
