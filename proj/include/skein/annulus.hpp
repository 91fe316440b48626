#pragma once

// The hook span of the annulus skein: linear combinations of the closed hook
// idempotents Q_(a|b) and the empty link.  Only the operations that stay in
// this span are provided: the hook expansion of D_k, the diagonal action of
// the meridian D_{1,0}, and projections D_x . (empty link).

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "skein/coeff.hpp"
#include "skein/torus.hpp"

namespace skein {

/// Hook partition (a|b): arm a, leg b, a + b + 1 cells.
struct Hook {
  int arm = 0;
  int leg = 0;
  int size() const { return arm + leg + 1; }
  auto operator<=>(const Hook&) const = default;
};

class Partition {
 public:
  Partition() = default;
  /// Throws DomainError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  static Partition hook(const Hook& h);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  bool empty() const { return parts_.empty(); }
  /// Contents j - i over all cells (i = row, j = column, both from 0).
  std::vector<int> contents() const;

 private:
  std::vector<int> parts_;
};

class AnnulusElement {
 public:
  using HookMap = std::map<Hook, RatFunc>;

  AnnulusElement() = default;
  static AnnulusElement empty_link(const RatFunc& c = RatFunc(1));
  static AnnulusElement hook(const Hook& h, const RatFunc& c = RatFunc(1));

  const RatFunc& unit_coeff() const { return unit_; }
  const HookMap& hook_terms() const { return hooks_; }
  RatFunc coeff(const Hook& h) const;
  bool is_zero() const { return unit_.is_zero() && hooks_.empty(); }
  bool is_scalar() const { return hooks_.empty(); }

  void add_hook(const Hook& h, const RatFunc& c);
  void add_unit(const RatFunc& c) { unit_ += c; }

  AnnulusElement& operator+=(const AnnulusElement& o);
  AnnulusElement& operator-=(const AnnulusElement& o);
  AnnulusElement& operator*=(const RatFunc& c);
  friend AnnulusElement operator+(AnnulusElement a, const AnnulusElement& b) { return a += b; }
  friend AnnulusElement operator-(AnnulusElement a, const AnnulusElement& b) { return a -= b; }
  friend AnnulusElement operator*(const RatFunc& c, AnnulusElement a) { return a *= c; }

  friend bool operator==(const AnnulusElement&, const AnnulusElement&) = default;

  std::string to_string() const;

 private:
  RatFunc unit_;
  HookMap hooks_;
};

/// 0 for odd k, -1 for even k.
RatFunc c_constant(int k);

/// D_k = sum_{i+j+1=k} (-1)^j Q_(i|j) + c_k.
AnnulusElement hook_expansion(int k);

/// delta + (s - s^-1)(v^-1 sum s^{2 cn} - v sum s^{-2 cn}) over the cells.
RatFunc meridian_eigenvalue(const Partition& lam);

/// Closed form for a hook of size n: delta + v^-1 {n} s^{a-b} - v {n} s^{b-a}.
RatFunc hook_eigenvalue_closed_form(const Hook& h);

/// Action of D_{1,0}: each Q_lambda scaled by its eigenvalue, the unit by delta.
AnnulusElement act_meridian(const AnnulusElement& e);

/// D_{M,N} . (empty link) for N >= 1, with k = gcd(M,N) (gcd(0,N) = N).
AnnulusElement project_empty(const Vec2& x);

/// Checks that [D_{1,0}, D_{1,n}] . empty = {n}(D_{2,n} - D_{0,n}) . empty,
/// and that both equal {n} sum (v^-2 s^{2(a-b)} - 1)(-1)^b Q_(a|b).
bool angled_on_empty_check(int n);

}  // namespace skein
