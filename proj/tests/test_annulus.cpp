#include <doctest.h>

#include "skein/annulus.hpp"

using namespace skein;

namespace {

RatFunc s(int e = 1) { return RatFunc::s(e); }
RatFunc v(int e = 1) { return RatFunc::v(e); }
AnnulusElement Q(int a, int b) { return AnnulusElement::hook({a, b}); }

// Direct content sum over the cells, written out independently.
RatFunc eigen_by_cells(const std::vector<int>& parts) {
  RatFunc plus, minus;
  for (int i = 0; i < static_cast<int>(parts.size()); ++i)
    for (int j = 0; j < parts[i]; ++j) {
      plus += s(2 * (j - i));
      minus += s(-2 * (j - i));
    }
  return delta() + (s() - s(-1)) * (v(-1) * plus - v() * minus);
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(Partition({3, 1, 1}).size() == 5);
  CHECK(Partition::hook({2, 2}).parts() == std::vector<int>{3, 1, 1});
  CHECK(Partition({2, 1}).contents() == std::vector<int>{0, 1, -1});
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({2, 0}), DomainError);
}

TEST_CASE("c constants") {
  CHECK(c_constant(1).is_zero());
  CHECK(c_constant(2) == RatFunc(-1));
  CHECK(c_constant(7).is_zero());
  CHECK(c_constant(8) == RatFunc(-1));
  CHECK_THROWS_AS(c_constant(0), DomainError);
}

TEST_CASE("hook expansion") {
  CHECK(hook_expansion(1) == Q(0, 0));
  CHECK(hook_expansion(2) == Q(1, 0) - Q(0, 1) - AnnulusElement::empty_link());
  CHECK(hook_expansion(3) == Q(2, 0) - Q(1, 1) + Q(0, 2));
  for (int k = 1; k <= 10; ++k) {
    CAPTURE(k);
    const AnnulusElement e = hook_expansion(k);
    CHECK(e.hook_terms().size() == static_cast<std::size_t>(k));
    CHECK(e.unit_coeff() == c_constant(k));
  }
  CHECK_THROWS_AS(hook_expansion(0), DomainError);
}

TEST_CASE("meridian eigenvalues") {
  CHECK(meridian_eigenvalue(Partition()) == delta());
  CHECK(meridian_eigenvalue(Partition({1})) == delta() + (s() - s(-1)) * (v(-1) - v()));
  for (const auto& p : std::vector<std::vector<int>>{{2}, {1, 1}, {3, 2, 2, 1}, {4, 4}, {5, 1, 1, 1}})
    CHECK(meridian_eigenvalue(Partition(p)) == eigen_by_cells(p));
  for (int n = 1; n <= 10; ++n)
    for (int a = 0; a < n; ++a) {
      const Hook h{a, n - 1 - a};
      CAPTURE(n);
      CAPTURE(a);
      CHECK(hook_eigenvalue_closed_form(h) == meridian_eigenvalue(Partition::hook(h)));
    }
}

TEST_CASE("meridian action") {
  CHECK(act_meridian(AnnulusElement::empty_link()) == delta() * AnnulusElement::empty_link());
  CHECK(act_meridian(Q(0, 0)) == meridian_eigenvalue(Partition({1})) * Q(0, 0));
  const AnnulusElement e = RatFunc(3) * Q(1, 2) + AnnulusElement::empty_link(s());
  CHECK(act_meridian(e) ==
        RatFunc(3) * hook_eigenvalue_closed_form({1, 2}) * Q(1, 2) + AnnulusElement::empty_link(s() * delta()));
}

TEST_CASE("projections onto the empty link") {
  CHECK(project_empty({0, 1}) == Q(0, 0));
  CHECK(project_empty({1, 1}) == v(-1) * Q(0, 0));
  for (int n = 1; n <= 8; ++n) CHECK(project_empty({0, n}) == hook_expansion(n));
  CHECK_THROWS_AS(project_empty({1, 0}), DomainError);
  CHECK_THROWS_AS(project_empty({1, -1}), DomainError);
}

TEST_CASE("angled relation on the empty link") {
  // n = 1 by hand: both sides are {1}(v^-2 - 1) Q(0|0).
  const RatFunc q1 = qint(1);
  CHECK(q1 * (project_empty({2, 1}) - project_empty({0, 1})) == q1 * (v(-2) - RatFunc(1)) * Q(0, 0));
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(angled_on_empty_check(n));
  }
}

TEST_CASE("rendering") {
  CHECK(hook_expansion(3).to_string() == "Q[0|2] - Q[1|1] + Q[2|0]");
  CHECK(AnnulusElement().to_string() == "0");
}
