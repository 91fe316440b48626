#pragma once

// The Kauffman bracket skein algebra of the torus in the basis e_x:
//
//   e_x e_y = s^d e_{x+y} + s^-d e_{x-y},   d = det[x y],   e_0 = 2,
//
// plus the Chebyshev polynomials T_n, S_n and the map from the BMW side.

#include <map>
#include <string>
#include <vector>

#include "skein/coeff.hpp"
#include "skein/torus.hpp"

namespace skein {

class BracketElement {
 public:
  using TermMap = std::map<CurveClass, RatFunc>;

  BracketElement() = default;
  /// Throws DomainError if c involves v.
  static BracketElement scalar(const RatFunc& c);
  static BracketElement unit() { return scalar(RatFunc(1)); }
  static BracketElement generator(const CurveClass& x, const RatFunc& c = RatFunc(1));
  /// e_x for any x, with e_0 = 2.
  static BracketElement e(const Vec2& x, const RatFunc& c = RatFunc(1));

  const RatFunc& unit_coeff() const { return unit_; }
  const TermMap& curve_terms() const { return terms_; }
  RatFunc coeff(const CurveClass& x) const;
  bool is_zero() const { return unit_.is_zero() && terms_.empty(); }

  void add_curve(const CurveClass& x, const RatFunc& c);
  void add_unit(const RatFunc& c);

  BracketElement& operator+=(const BracketElement& o);
  BracketElement& operator-=(const BracketElement& o);
  BracketElement& operator*=(const RatFunc& c);
  friend BracketElement operator+(BracketElement a, const BracketElement& b) { return a += b; }
  friend BracketElement operator-(BracketElement a, const BracketElement& b) { return a -= b; }
  friend BracketElement operator*(const RatFunc& c, BracketElement a) { return a *= c; }

  friend bool operator==(const BracketElement&, const BracketElement&) = default;

  std::string to_string() const;

 private:
  RatFunc unit_;
  TermMap terms_;
};

BracketElement e_mul(const BracketElement& p, const BracketElement& q);
inline BracketElement operator*(const BracketElement& p, const BracketElement& q) { return e_mul(p, q); }
BracketElement e_commutator(const BracketElement& p, const BracketElement& q);

/// (s^d - s^-d)(e_{x+y} - e_{x-y}).
BracketElement e_relation_rhs(const CurveClass& x, const CurveClass& y);

/// Specialize coefficients (v -> -s^-3) and send D_x to e_x.  Throws
/// DomainError if a coefficient has a pole under the specialization.
BracketElement phi_map(const SkeinElement& p);

enum class ChebKind { T, S };

/// Integer polynomial in x; coeffs[i] multiplies x^i.
struct ChebPoly {
  std::vector<Integer> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  /// Value at x = X + X^-1, as a Laurent polynomial in X (written as s).
  LaurentPoly substitute_x_plus_inverse() const;
  bool operator==(const ChebPoly&) const = default;
  std::string to_string() const;
};

/// P_{n+1} = x P_n - P_{n-1}; T_0 = 2, T_1 = x; S_0 = 1, S_1 = x.
ChebPoly cheb(int n, ChebKind kind);

/// T_n(X + X^-1) = X^n + X^-n and (X - X^-1) S_n(X + X^-1) = X^{n+1} - X^{-n-1}.
bool cheb_functional_equation(int n, ChebKind kind);

/// sum_{k>=1} T_k/k t^k = ln(1 + sum_{j>=1} S_j t^j) through order t^N.
bool cheb_log_identity_check(int N);

}  // namespace skein
