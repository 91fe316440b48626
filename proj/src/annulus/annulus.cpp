#include "skein/annulus.hpp"

#include <numeric>

#include "skein/detail/render.hpp"

namespace skein {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition Partition::hook(const Hook& h) {
  if (h.arm < 0 || h.leg < 0) throw DomainError("hook arm and leg must be nonnegative");
  std::vector<int> parts{h.arm + 1};
  parts.insert(parts.end(), h.leg, 1);
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::contents() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (int j = 0; j < parts_[i]; ++j) out.push_back(j - static_cast<int>(i));
  return out;
}

AnnulusElement AnnulusElement::empty_link(const RatFunc& c) {
  AnnulusElement e;
  e.unit_ = c;
  return e;
}

AnnulusElement AnnulusElement::hook(const Hook& h, const RatFunc& c) {
  AnnulusElement e;
  e.add_hook(h, c);
  return e;
}

RatFunc AnnulusElement::coeff(const Hook& h) const {
  auto it = hooks_.find(h);
  return it == hooks_.end() ? RatFunc() : it->second;
}

void AnnulusElement::add_hook(const Hook& h, const RatFunc& c) {
  if (h.arm < 0 || h.leg < 0) throw DomainError("hook arm and leg must be nonnegative");
  if (c.is_zero()) return;
  auto [it, inserted] = hooks_.try_emplace(h, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) hooks_.erase(it);
  }
}

AnnulusElement& AnnulusElement::operator+=(const AnnulusElement& o) {
  unit_ += o.unit_;
  for (const auto& [h, c] : o.hooks_) add_hook(h, c);
  return *this;
}

AnnulusElement& AnnulusElement::operator-=(const AnnulusElement& o) {
  unit_ -= o.unit_;
  for (const auto& [h, c] : o.hooks_) add_hook(h, -c);
  return *this;
}

AnnulusElement& AnnulusElement::operator*=(const RatFunc& c) {
  unit_ *= c;
  if (c.is_zero()) {
    hooks_.clear();
    return *this;
  }
  for (auto& [h, x] : hooks_) x *= c;
  return *this;
}

std::string AnnulusElement::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  if (!unit_.is_zero()) {
    out += detail::render_term("", unit_, true);
    first = false;
  }
  for (const auto& [h, c] : hooks_) {
    out += detail::render_term("Q[" + std::to_string(h.arm) + "|" + std::to_string(h.leg) + "]", c, first);
    first = false;
  }
  return out;
}

RatFunc c_constant(int k) {
  if (k < 1) throw DomainError("c_k requires k >= 1");
  return k % 2 == 0 ? RatFunc(-1) : RatFunc(0);
}

AnnulusElement hook_expansion(int k) {
  AnnulusElement e = AnnulusElement::empty_link(c_constant(k));
  for (int j = 0; j < k; ++j) e.add_hook(Hook{k - 1 - j, j}, j % 2 == 0 ? RatFunc(1) : RatFunc(-1));
  return e;
}

RatFunc meridian_eigenvalue(const Partition& lam) {
  LaurentPoly up, down;
  for (int cn : lam.contents()) {
    up += LaurentPoly::s(2 * cn);
    down += LaurentPoly::s(-2 * cn);
  }
  const LaurentPoly z = LaurentPoly::s(1) - LaurentPoly::s(-1);
  return delta() + RatFunc(z * (LaurentPoly::v(-1) * up - LaurentPoly::v(1) * down));
}

RatFunc hook_eigenvalue_closed_form(const Hook& h) {
  const RatFunc n = qint(h.size());
  return delta() + RatFunc::v(-1) * n * RatFunc::s(h.arm - h.leg) - RatFunc::v(1) * n * RatFunc::s(h.leg - h.arm);
}

AnnulusElement act_meridian(const AnnulusElement& e) {
  AnnulusElement r = AnnulusElement::empty_link(e.unit_coeff() * delta());
  for (const auto& [h, c] : e.hook_terms()) r.add_hook(h, c * meridian_eigenvalue(Partition::hook(h)));
  return r;
}

AnnulusElement project_empty(const Vec2& x) {
  if (x.b < 1) throw DomainError("project_empty requires N >= 1");
  const std::int64_t k = std::gcd(x.a, x.b);
  const std::int64_t m = x.a / k;
  const std::int64_t total = x.b;  // k n
  AnnulusElement e = AnnulusElement::empty_link(c_constant(static_cast<int>(k)));
  const int km = static_cast<int>(k * m);
  for (std::int64_t bb = 0; bb < total; ++bb) {
    const int b = static_cast<int>(bb);
    const int a = static_cast<int>(total - 1 - bb);
    e.add_hook(Hook{a, b}, RatFunc(LaurentPoly::monomial(b % 2 == 0 ? 1 : -1, km * (a - b), -km)));
  }
  return e;
}

bool angled_on_empty_check(int n) {
  if (n < 1) throw DomainError("angled_on_empty_check requires n >= 1");
  const AnnulusElement p1n = project_empty({1, n});
  const AnnulusElement lhs = act_meridian(p1n) - delta() * p1n;
  const RatFunc bn = qint(n);
  const AnnulusElement rhs = bn * (project_empty({2, n}) - project_empty({0, n}));

  AnnulusElement expansion;
  for (int b = 0; b < n; ++b) {
    const int a = n - 1 - b;
    const RatFunc sign = b % 2 == 0 ? RatFunc(1) : RatFunc(-1);
    expansion.add_hook(Hook{a, b}, bn * (RatFunc(LaurentPoly::monomial(1, 2 * (a - b), -2)) - RatFunc(1)) * sign);
  }
  return lhs == rhs && rhs == expansion;
}

}  // namespace skein
