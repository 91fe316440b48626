#include <doctest.h>

#include "skein/expr.hpp"
#include "skein/json_io.hpp"
#include "skein/prng.hpp"
#include "skein/suite.hpp"

using namespace skein;

namespace {

CurveClass C(std::int64_t a, std::int64_t b) { return CurveClass::canonicalize(a, b); }

SkeinElement torus(const std::string& text) { return std::get<SkeinElement>(evaluate(text, Context::torus)); }

}  // namespace

TEST_CASE("parse trees") {
  const Expr e = parse("D[1,0]*D[0,2] - {2}*D[1,2]", Context::torus);
  CHECK(e.kind == Expr::Kind::sub);
  CHECK(e.kids.size() == 2);
  CHECK(e.kids[0].kind == Expr::Kind::mul);
  CHECK(e.kids[1].kids[0].kind == Expr::Kind::qint);
  CHECK(e.size() == 7);
  CHECK(parse("-s^-2", Context::bracket).kind == Expr::Kind::neg);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse("D[0,0]", Context::torus), ParseError);
  CHECK_THROWS_AS(parse("e[1,0]", Context::torus), ParseError);
  CHECK_THROWS_AS(parse("D[1,0]", Context::bracket), ParseError);
  CHECK_THROWS_AS(parse("v*e[1,0]", Context::bracket), ParseError);
  CHECK_THROWS_AS(parse("D[1,0", Context::torus), ParseError);
  CHECK_THROWS_AS(parse("D[1,0] +", Context::torus), ParseError);
  CHECK_THROWS_AS(parse("D[10000000,1]", Context::torus), ParseError);
  try {
    parse("s + D[0,0]", Context::torus);
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.offset() == 4);
  }
}

TEST_CASE("evaluation examples") {
  CHECK(torus("D[1,0]*D[0,1] - D[0,1]*D[1,0]") == qint(1) * (generator(C(1, 1)) - generator(C(1, -1))));
  CHECK(torus("D[1,0] - D[-1,0]").is_zero());
  CHECK(std::get<AnnulusElement>(evaluate("Q[2|0] - Q[1|1] + Q[0|2]", Context::annulus)) == hook_expansion(3));
  CHECK(std::get<BracketElement>(evaluate("e[1,0]*e[1,0]", Context::bracket)) ==
        BracketElement::e({2, 0}) + BracketElement::scalar(RatFunc(2)));
  CHECK(torus("(s - s^-1)/{1} * D[1,0]") == generator(C(1, 0)));
  CHECK(torus("delta") == SkeinElement::scalar(delta()));
  CHECK(torus("D[1,0]^3") == normal_form({C(1, 0), C(1, 0), C(1, 0)}));
  CHECK_THROWS_AS(evaluate("1/D[1,0]", Context::torus), DomainError);
  CHECK_THROWS_AS(evaluate("D[1,0]^-1", Context::torus), DomainError);
  CHECK_THROWS_AS(evaluate("1/(s - s)", Context::torus), DomainError);
  CHECK_THROWS_AS(evaluate("Q[1|0]*Q[0|1]", Context::annulus), DomainError);
}

TEST_CASE("render then parse is the identity") {
  SplitMix64 rng(59);
  for (int i = 0; i < 40; ++i) {
    SkeinElement p;
    for (auto n = rng.uniform(1, 3); n > 0; --n) {
      Word w;
      for (auto k = rng.uniform(0, 3); k > 0; --k) {
        std::int64_t a = 0, b = 0;
        while (a == 0 && b == 0) {
          a = rng.uniform(-3, 3);
          b = rng.uniform(-3, 3);
        }
        w.push_back(C(a, b));
      }
      const RatFunc c = (RatFunc(rng.uniform(-5, 5)) * RatFunc::s(static_cast<int>(rng.uniform(-2, 2))) +
                         RatFunc::v(static_cast<int>(rng.uniform(-2, 2)))) /
                        (delta() + RatFunc(rng.uniform(1, 3)));
      p += c * normal_form(w);
    }
    const std::string text = p.to_string();
    CAPTURE(text);
    CHECK(torus(text) == p);
  }
  const AnnulusElement a = hook_expansion(4) + RatFunc::v(-1) * hook_expansion(2);
  CHECK(std::get<AnnulusElement>(evaluate(a.to_string(), Context::annulus)) == a);
  const BracketElement b = BracketElement::e({1, 2}) * BracketElement::e({3, -1});
  CHECK(std::get<BracketElement>(evaluate(b.to_string(), Context::bracket)) == b);
}

TEST_CASE("JSON round trips") {
  const SkeinElement p = torus("delta*D[1,0]*D[0,1] + s^-3/(v + 2)*D[2,1]");
  CHECK(skein_from_json(Json::parse(to_json(p).dump())) == p);
  const AnnulusElement a = project_empty({3, 2});
  CHECK(annulus_from_json(Json::parse(to_json(a).dump())) == a);
  const BracketElement b = BracketElement::e({1, 0}) * BracketElement::e({1, 0});
  CHECK(bracket_from_json(Json::parse(to_json(b).dump())) == b);
  const BMW2Element f = f2_closed_form();
  CHECK(bmw2_from_json(Json::parse(to_json(f).dump())) == f);
  CHECK(ratfunc_from_json(to_json(delta())) == delta());

  // Unsorted words are normalized on input.
  const Json unsorted = Json::parse(R"({"terms":[{"word":[[1,0],[0,1]],"coeff":{"num":[[0,0,"1"]],"den":[[0,0,"1"]]}}]})");
  CHECK(skein_from_json(unsorted) == multiply(generator(C(1, 0)), generator(C(0, 1))));

  CHECK_THROWS_AS(ratfunc_from_json(Json::parse(R"({"num":[[0,0,"1"]],"den":[]})")), DomainError);
  CHECK_THROWS_AS(ratfunc_from_json(Json::parse(R"({"num":[[0,0,"x"]],"den":[[0,0,"1"]]})")), DomainError);
  CHECK_THROWS_AS(skein_from_json(Json::parse(R"({"terms":[{"word":[[0,0]],"coeff":{"num":[],"den":[[0,0,"1"]]}}]})")),
                  DomainError);
  CHECK_THROWS_AS(bracket_from_json(Json::parse(R"({"terms":"no"})")), DomainError);
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 7);
  CHECK(check_names("all").size() == 33);
  CHECK(check_names("bmw2").size() == 5);
  CHECK_THROWS_AS(run_suite("nope", 0), DomainError);
  CHECK_THROWS_AS(run_check("torus.nope", 0), DomainError);
}

TEST_CASE("suite reports are reproducible") {
  SuiteLimits small;
  small.field_samples = 10;
  small.phi_samples = 10;
  small.bracket_assoc_samples = 20;
  for (const std::string suite : {"field", "bmw2", "bracket"}) {
    const SuiteReport a = run_suite(suite, 7, small), b = run_suite(suite, 7, small);
    CHECK(a.ok());
    CHECK(a.to_text() == b.to_text());
    CHECK(a.to_json() == b.to_json());
  }
  const CheckResult c = run_check("annulus.projection_axis", 0);
  CHECK(c.pass);
  CHECK(c.suite == "annulus");
}
