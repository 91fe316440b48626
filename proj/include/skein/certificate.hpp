#pragma once

// Certificates that a pair (x, y) is "good", i.e. that
//   [D_x, D_y] = {det(x,y)} (D_{x+y} - D_{x-y})
// follows from the two special relations
//   rel1: [D_{1,0}, D_{0,n}] = {n}(D_{1,n} - D_{1,-n})
//   rel2: [D_{1,0}, D_{1,n}] = {n}(D_{2,n} - D_{0,n})
// together with GL2(Z) equivariance, by repeatedly writing x = a + b and
// reducing (x, y) to the six pairs
//   (a,b), (y,a), (y,b), (y+a,b), (y+b,a), (a-b,y).
//
// A split node first moves its pair by a GL2 matrix to the normal position
// y = (0,r), x = (p,q) with 0 <= q < p and d(x) <= d(y) (swapping x and y
// when needed), and records a, b in that position.
//
// Well-foundedness: a child either has strictly smaller |det|, or has the
// same |det| and contains a primitive vector while its parent does not.  The
// primitive case is settled at each determinant level before the general
// one, so the order (|det|, parent-has-no-primitive-vector) is what the
// induction actually descends along.  `strictly_decreasing` reports whether
// a certificate happens to decrease |det| at every split.

#include <string>
#include <variant>
#include <vector>

#include "skein/torus.hpp"

namespace skein {

enum class BaseKind { rel1, rel2, unit_det };

std::string to_string(BaseKind k);
BaseKind base_kind_from_string(const std::string& s);

struct Certificate;

struct BaseNode {
  BaseKind kind = BaseKind::unit_det;
  /// Moves {x, y} onto the rel1/rel2 shape (identity for unit_det).
  GL2Matrix gl2 = GL2Matrix::identity();
};

struct SplitNode {
  GL2Matrix gl2 = GL2Matrix::identity();
  bool swapped = false;
  Vec2 x;  // normalized pair
  Vec2 y;
  Vec2 a;
  Vec2 b;
  std::vector<Certificate> children;
};

struct Certificate {
  Vec2 x;
  Vec2 y;
  std::variant<BaseNode, SplitNode> node;

  bool is_base() const { return std::holds_alternative<BaseNode>(node); }
};

/// Integers with u + w = p, v + z = q, 0 < u, w < p and uz - wv = 1.
struct DiophantineSplit {
  std::int64_t u, v, w, z;
};

/// Requires gcd(p,q) = 1, 0 < q < p, p > 1; throws DomainError otherwise.
DiophantineSplit diophantine_split(std::int64_t p, std::int64_t q);

/// The GL2 move to normal position used by split nodes.
struct NormalPosition {
  GL2Matrix gl2 = GL2Matrix::identity();
  bool swapped = false;
  Vec2 x;
  Vec2 y;
};
/// Requires det(x,y) != 0.
NormalPosition normal_position(const Vec2& x, const Vec2& y);

/// Throws DomainError on zero vectors; InternalError if reduction stalls.
Certificate build_certificate(const Vec2& x, const Vec2& y);

struct ValidationResult {
  bool ok = true;
  std::string path;  // "root/2/5" style location of the first failure
  std::string reason;
  explicit operator bool() const { return ok; }
};

ValidationResult check_certificate(const Certificate& c);
inline bool validate_certificate(const Certificate& c) { return check_certificate(c).ok; }

/// True when every split node's children have strictly smaller |det|.
bool strictly_decreasing(const Certificate& c);

std::size_t depth(const Certificate& c);
std::size_t node_count(const Certificate& c);

/// Checks the four coefficient collapses behind the splitting step:
///   c1 = -{d(a,b)}{d(x,y)},      c2 =  {d(a,b)}{d(x,y)},
///   c3 = -{d(a,b)}{d(a-b,y)},    c4 =  {d(a,b)}{d(a-b,y)}
/// where c1..c4 are the coefficients obtained by expanding the Jacobi
/// identity with x = a + b, and the resulting element identity.
bool coefficient_collapse_check(const Vec2& a, const Vec2& b, const Vec2& y);

}  // namespace skein
