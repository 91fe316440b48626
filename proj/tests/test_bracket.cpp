#include <doctest.h>

#include "skein/bracket.hpp"
#include "skein/prng.hpp"

using namespace skein;

namespace {

RatFunc s(int e = 1) { return RatFunc::s(e); }
CurveClass C(std::int64_t a, std::int64_t b) { return CurveClass::canonicalize(a, b); }
BracketElement e(std::int64_t a, std::int64_t b) { return BracketElement::e({a, b}); }

Vec2 random_vec(SplitMix64& rng, int box) {
  for (;;) {
    Vec2 x{rng.uniform(-box, box), rng.uniform(-box, box)};
    if (!x.is_zero()) return x;
  }
}

// Product of two integer polynomials in x.
std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Integer> poly_add(std::vector<Integer> a, const std::vector<Integer>& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

}  // namespace

TEST_CASE("basis and scalars") {
  CHECK(e(0, 0) == BracketElement::scalar(RatFunc(2)));
  CHECK(e(-1, 0) == e(1, 0));
  CHECK_THROWS_AS(BracketElement::scalar(RatFunc::v()), DomainError);
  CHECK(e(1, 0).to_string() == "e[1,0]");
}

TEST_CASE("product law") {
  CHECK(e(1, 0) * e(0, 1) == s() * e(1, 1) + s(-1) * e(1, -1));
  CHECK(e(1, 0) * e(1, 0) == e(2, 0) + BracketElement::scalar(RatFunc(2)));
  SplitMix64 rng(43);
  for (int i = 0; i < 30; ++i) {
    const Vec2 x = random_vec(rng, 3);
    CHECK(e(x.a, x.b) * e(x.a, x.b) == BracketElement::e(x * 2) + BracketElement::scalar(RatFunc(2)));
    CHECK(BracketElement::unit() * e(x.a, x.b) == e(x.a, x.b));
  }
}

TEST_CASE("associativity on basis triples") {
  SplitMix64 rng(47);
  for (int i = 0; i < 200; ++i) {
    const Vec2 x = random_vec(rng, 3), y = random_vec(rng, 3), z = random_vec(rng, 3);
    const BracketElement a = BracketElement::e(x), b = BracketElement::e(y), c = BracketElement::e(z);
    REQUIRE((a * b) * c == a * (b * c));
  }
}

TEST_CASE("commutators") {
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) {
          if ((a == 0 && b == 0) || (c == 0 && d == 0)) continue;
          const CurveClass x = C(a, b), y = C(c, d);
          const std::int64_t det_xy = det(x.vec(), y.vec());
          const BracketElement expect =
              (s(static_cast<int>(det_xy)) - s(static_cast<int>(-det_xy))) *
              (BracketElement::e(x.vec() + y.vec()) - BracketElement::e(x.vec() - y.vec()));
          CHECK(e_commutator(BracketElement::generator(x), BracketElement::generator(y)) == expect);
          CHECK(e_relation_rhs(x, y) == expect);
        }
}

TEST_CASE("phi on generators and commutators") {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      if (a == 0 && b == 0) continue;
      CHECK(phi_map(generator(C(a, b))) == e(a, b));
    }
  SplitMix64 rng(53);
  for (int i = 0; i < 30; ++i) {
    const CurveClass x = CurveClass::canonicalize(random_vec(rng, 3)), y = CurveClass::canonicalize(random_vec(rng, 3));
    CHECK(phi_map(commutator(generator(x), generator(y))) == e_relation_rhs(x, y));
  }
  CHECK(phi_map(SkeinElement::scalar(delta())) == BracketElement::scalar(-s(2) - s(-2)));
  CHECK_THROWS_AS(phi_map(SkeinElement::scalar(RatFunc(1) / (RatFunc::v() + s(-3)))), DomainError);
}

TEST_CASE("Chebyshev polynomials") {
  CHECK(cheb(0, ChebKind::T).coeffs == std::vector<Integer>{2});
  CHECK(cheb(0, ChebKind::S).coeffs == std::vector<Integer>{1});
  CHECK(cheb(2, ChebKind::T).coeffs == std::vector<Integer>{-2, 0, 1});
  CHECK(cheb(2, ChebKind::S).coeffs == std::vector<Integer>{-1, 0, 1});
  CHECK(cheb(2, ChebKind::T).to_string() == "x^2 - 2");
  CHECK_THROWS_AS(cheb(-1, ChebKind::T), DomainError);
  for (int n = 0; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(cheb_functional_equation(n, ChebKind::T));
    CHECK(cheb_functional_equation(n, ChebKind::S));
  }
  // T_m T_n = T_{m+n} + T_{|m-n|}.
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      CHECK(poly_mul(cheb(m, ChebKind::T).coeffs, cheb(n, ChebKind::T).coeffs) ==
            poly_add(cheb(m + n, ChebKind::T).coeffs, cheb(std::abs(m - n), ChebKind::T).coeffs));
}

TEST_CASE("parallel curves follow Chebyshev multiplication") {
  for (const Vec2 x0 : {Vec2{1, 0}, Vec2{2, 3}, Vec2{1, -4}})
    for (int m = 1; m <= 5; ++m)
      for (int n = 1; n <= 5; ++n)
        CHECK(BracketElement::e(x0 * m) * BracketElement::e(x0 * n) ==
              BracketElement::e(x0 * (m + n)) + BracketElement::e(x0 * std::abs(m - n)));
}

TEST_CASE("logarithm identity") {
  CHECK(cheb_log_identity_check(1));
  CHECK(cheb_log_identity_check(2));
  CHECK(cheb_log_identity_check(12));
  CHECK_THROWS_AS(cheb_log_identity_check(0), DomainError);
}
