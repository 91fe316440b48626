#include <doctest.h>

#include "skein/bmw2.hpp"

using namespace skein;

namespace {

RatFunc s(int e = 1) { return RatFunc::s(e); }
RatFunc v(int e = 1) { return RatFunc::v(e); }
const BMW2Element one = BMW2Element::unit();
const BMW2Element sg = BMW2Element::sigma_gen();
const BMW2Element h = BMW2Element::h_gen();

BMW2Element bar(const BMW2Element& x) { return {x.one.bar(), x.sigma.bar(), x.h.bar()}; }

}  // namespace

TEST_CASE("structure constants") {
  CHECK(h * h == delta() * h);
  // The curl on a cap is absorbed with v (see the notes on framing in the README).
  CHECK(sg * h == v() * h);
  CHECK(h * sg == v() * h);
  CHECK(sg * sg == one + (s() - s(-1)) * (sg - v() * h));
  CHECK(sg - sigma_inverse() == (s() - s(-1)) * (one - h));
  CHECK(sg * sigma_inverse() == one);
  CHECK(sigma_inverse() * sg == one);
  CHECK(bmw2_inverse(sg) == sigma_inverse());
  CHECK_THROWS_AS(bmw2_inverse(h), DomainError);
}

TEST_CASE("associativity of the basis products") {
  const BMW2Element basis[] = {one, sg, h};
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("p1 plus") {
  const BMW2Element p = p1_plus();
  CHECK(p == one - delta().inverse() * h);
  CHECK(p * p == p);
  CHECK(p * h == BMW2Element{});
  CHECK(h * p == BMW2Element{});
  CHECK(bar(p) == p);
}

TEST_CASE("section from the Hecke quotient") {
  CHECK(section_s2(one) == p1_plus());
  CHECK_THROWS_AS(section_s2(h), DomainError);
  CHECK(project_hecke(sg * sg + h) == one + (s() - s(-1)) * sg);
  // Multiplicative after projecting products back to the quotient.
  const BMW2Element samples[] = {one, sg, project_hecke(sg * sg), RatFunc(2) * one - s() * sg};
  for (const auto& x : samples)
    for (const auto& y : samples) CHECK(section_s2(project_hecke(x * y)) == section_s2(x) * section_s2(y));
}

TEST_CASE("symmetrizer") {
  const BMW2Element f = f2_closed_form();
  const RatFunc beta1 = -delta().inverse() * (s() * v() + RatFunc(1));
  CHECK(beta1 == beta(1));
  CHECK(f == (s(2) + RatFunc(1)).inverse() * (one + s() * sg + beta1 * h));
  CHECK(section_s2(z2_element()) == f);
  CHECK(f * f == f);
  CHECK(f * sg == s() * f);
  CHECK(sg * f == s() * f);
  CHECK(f * h == BMW2Element{});
  CHECK(h * f == BMW2Element{});
  CHECK(f2_checks());
}

TEST_CASE("B2") {
  const BMW2Element p2 = p2_element();
  CHECK(p2 == (s() + s(-1)).inverse() * (sg + sigma_inverse()));
  CHECK_THROWS_AS(section_s2(p2), DomainError);
  CHECK(section_s2(project_hecke(p2)) == b2_closed_form());
  CHECK(b2_closed_form() == p2 - ((v() + v(-1)) / (s() + s(-1))) * delta().inverse() * h);
  CHECK(b2_closed_form() - (RatFunc(2) * f2_closed_form() - one) == delta().inverse() * h);
}

TEST_CASE("rendering") {
  CHECK(sg.to_string() == "sigma");
  CHECK((sg + h).to_string().find('h') != std::string::npos);
}
