#include <doctest.h>

#include "skein/coeff.hpp"
#include "skein/prng.hpp"

using namespace skein;

namespace {

RatFunc s(int e = 1) { return RatFunc::s(e); }
RatFunc v(int e = 1) { return RatFunc::v(e); }

LaurentPoly random_poly(SplitMix64& rng) {
  LaurentPoly p;
  for (auto n = rng.uniform(1, 3); n > 0; --n)
    p += LaurentPoly::monomial(Rational(rng.uniform(-4, 4)), static_cast<int>(rng.uniform(-2, 2)),
                               static_cast<int>(rng.uniform(-2, 2)));
  return p;
}

RatFunc random_ratfunc(SplitMix64& rng) {
  LaurentPoly den;
  while (den.is_zero()) den = random_poly(rng);
  return RatFunc(random_poly(rng), den);
}

}  // namespace

TEST_CASE("field operations on simple Laurent polynomials") {
  CHECK((s() + s(-1)).to_string() == "s + s^-1");
  CHECK(ratfunc_arith(s() - s(-1), s() + s(-1), OpKind::mul) == s(2) - s(-2));
  CHECK(ratfunc_arith(s(2) - s(-2), s() - s(-1), OpKind::div) == s() + s(-1));
  CHECK(ratfunc_arith(s(2), s(), OpKind::sub) == s(2) - s());
  CHECK_THROWS_AS(ratfunc_arith(s(), RatFunc(), OpKind::div), DomainError);
  CHECK_THROWS_AS(RatFunc(LaurentPoly(1), LaurentPoly()), DomainError);
}

TEST_CASE("quantum integers") {
  CHECK(qint(0).is_zero());
  CHECK(qint(2) == s(2) - s(-2));
  CHECK(qint(-2) == -qint(2));
  CHECK(qint(2, QIntKind::brace_plus) == s(2) + s(-2));
  CHECK(qint(3, QIntKind::bracket) == s(2) + RatFunc(1) + s(-2));
  CHECK(qint(3, QIntKind::bracket).is_polynomial());
  CHECK(qint(3, QIntKind::bracket).to_string() == "s^2 + 1 + s^-2");
}

TEST_CASE("unknot value and beta") {
  CHECK(delta() == RatFunc(1) - (v() - v(-1)) / (s() - s(-1)));
  CHECK(delta().bar() == delta());
  CHECK(beta(1) == (RatFunc(1) - s(2)) / (s() * v(-1) - RatFunc(1)));
  CHECK(beta(2, true) == beta(2).bar());
  CHECK_THROWS_AS(beta(0), DomainError);
}

TEST_CASE("ring identities for beta") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(s() - s(-1) * beta(n) == s(-1) - s() * beta(n, true));
    CHECK((beta(n + 1, true) - beta(n + 1)) * (s() - s(-1) * beta(n)) == -qint(1));
  }
}

TEST_CASE("bar involution") {
  CHECK(bar_involution(s(2) * v()) == s(-2) * v(-1));
  for (int n = 1; n <= 6; ++n) CHECK(bar_involution(qint(n)) == -qint(n));
  SplitMix64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
  }
}

TEST_CASE("bracket specialization") {
  CHECK(specialize_bracket(v(-1)) == -s(3));
  CHECK(specialize_bracket(delta()) == -s(2) - s(-2));
  CHECK(specialize_bracket(qint(4)) == qint(4));
  CHECK_FALSE(specialize_bracket(delta()).has_v());
  // 1/(v + s^-3) has a pole under v -> -s^-3.
  CHECK_THROWS_AS(specialize_bracket(RatFunc(1) / (v() + s(-3))), DomainError);
}

TEST_CASE("evaluation at rational points") {
  CHECK(eval_rational(qint(2), 2, 1) == Rational(15, 4));
  CHECK(eval_rational(delta(), 2, 3) == Rational(-7, 9));
  CHECK(eval_rational(RatFunc(), 5, 7) == 0);
  CHECK_THROWS_AS(eval_rational(s(-1), 0, 1), DomainError);
  CHECK_THROWS_AS(eval_rational(RatFunc(1) / (s() - RatFunc(1)), 1, 1), DomainError);
}

TEST_CASE("canonical form decides equality") {
  SplitMix64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK((a - a).is_zero());
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == RatFunc(1));
      CHECK((b / a) * a == b);
    }
    // Rebuilding from an unreduced fraction gives the same representation.
    const LaurentPoly k = random_poly(rng);
    if (!k.is_zero()) CHECK(RatFunc(a.num() * k, a.den() * k) == a);
    CHECK(agree_at_random_points(a * b, b * a, rng.next()));
  }
}

TEST_CASE("canonical denominator normalization") {
  const RatFunc f(LaurentPoly(-2) * LaurentPoly::s(1), LaurentPoly(4) - LaurentPoly::s(2) * LaurentPoly(6));
  // Denominator primitive, positive on its lex-greatest monomial.
  CHECK(f.den().leading().second > 0);
  CHECK(f == RatFunc(LaurentPoly::s(1), LaurentPoly::s(2) * LaurentPoly(3) - LaurentPoly(2)));
  CHECK(RatFunc(LaurentPoly::s(3), LaurentPoly::s(5)) == s(-2));
  CHECK(RatFunc(LaurentPoly::s(2) - LaurentPoly(1), LaurentPoly::s(1) - LaurentPoly(1)) == s() + RatFunc(1));
}

TEST_CASE("powers") {
  CHECK(s().pow(3) == s(3));
  CHECK(qint(1).pow(0) == RatFunc(1));
  CHECK(qint(1).pow(-1) * qint(1) == RatFunc(1));
  CHECK_THROWS_AS(RatFunc().pow(-1), DomainError);
}

TEST_CASE("random point oracle separates distinct values") {
  CHECK(agree_at_random_points(delta(), delta().bar(), 1));
  CHECK_FALSE(agree_at_random_points(delta(), qint(1), 1));
}
