#pragma once

// The skein algebra of the torus in its presented form.
//
// Generators D_x are indexed by nonzero x in Z^2 up to sign.  Elements are
// kept in the basis of sorted words (multisets of curve classes) and products
// are normalized by the reordering rule
//
//   D_y D_x  ->  D_x D_y - {det(x,y)} (D_{x+y} - D_{x-y})      (x < y)
//
// which strictly shortens the correction terms, so rewriting terminates.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skein/coeff.hpp"

namespace skein {

struct Vec2 {
  std::int64_t a = 0;
  std::int64_t b = 0;

  auto operator<=>(const Vec2&) const = default;
  Vec2 operator+(const Vec2& o) const { return {a + o.a, b + o.b}; }
  Vec2 operator-(const Vec2& o) const { return {a - o.a, b - o.b}; }
  Vec2 operator-() const { return {-a, -b}; }
  Vec2 operator*(std::int64_t k) const { return {k * a, k * b}; }
  bool is_zero() const { return a == 0 && b == 0; }
};

/// d(x,y) = det[x y].
inline std::int64_t det(const Vec2& x, const Vec2& y) { return x.a * y.b - x.b * y.a; }
/// d(x) = gcd of the entries (nonnegative; gcd(0,n) = |n|).
std::int64_t content(const Vec2& x);
std::string to_string(const Vec2& x);

/// Canonical representative of x ~ -x: a > 0, or a == 0 and b > 0.
class CurveClass {
 public:
  /// Throws DomainError for the zero vector.
  static CurveClass canonicalize(std::int64_t a, std::int64_t b);
  static CurveClass canonicalize(const Vec2& x) { return canonicalize(x.a, x.b); }

  std::int64_t a() const { return v_.a; }
  std::int64_t b() const { return v_.b; }
  const Vec2& vec() const { return v_; }

  auto operator<=>(const CurveClass&) const = default;

 private:
  explicit CurveClass(Vec2 v) : v_(v) {}
  Vec2 v_;
};

inline CurveClass canonicalize(std::int64_t a, std::int64_t b) { return CurveClass::canonicalize(a, b); }

/// A word in the generators.  In normal form it is sorted ascending.
using Word = std::vector<CurveClass>;

class SkeinElement {
 public:
  using TermMap = std::map<Word, RatFunc>;

  SkeinElement() = default;
  static SkeinElement unit() { return scalar(RatFunc(1)); }
  static SkeinElement scalar(const RatFunc& c);
  static SkeinElement generator(const CurveClass& x);
  /// Single basis element; `w` must already be sorted.
  static SkeinElement basis_word(Word w, const RatFunc& c = RatFunc(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of a sorted word (zero when absent).
  RatFunc coeff(const Word& w) const;
  std::size_t max_word_length() const;
  /// True when the element is c * unit.
  bool is_scalar() const;

  void add_term(const Word& w, const RatFunc& c);

  SkeinElement& operator+=(const SkeinElement& o);
  SkeinElement& operator-=(const SkeinElement& o);
  SkeinElement& operator*=(const RatFunc& c);
  friend SkeinElement operator+(SkeinElement a, const SkeinElement& b) { return a += b; }
  friend SkeinElement operator-(SkeinElement a, const SkeinElement& b) { return a -= b; }
  friend SkeinElement operator*(const RatFunc& c, SkeinElement a) { return a *= c; }
  SkeinElement operator-() const;

  friend bool operator==(const SkeinElement&, const SkeinElement&) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

inline SkeinElement generator(const CurveClass& x) { return SkeinElement::generator(x); }

/// How words are brought to normal form.  `insertion` multiplies sorted
/// words by one generator at a time (memoized per thread); `leftmost` and
/// `rightmost` bubble-sort the whole word, rewriting the first or last
/// out-of-order adjacent pair.  All three give the same normal form.
enum class RewriteStrategy { insertion, leftmost, rightmost };

/// Normal form of an arbitrary (unsorted) word.
SkeinElement normal_form(const Word& w, RewriteStrategy strategy = RewriteStrategy::insertion);

SkeinElement multiply(const SkeinElement& p, const SkeinElement& q,
                      RewriteStrategy strategy = RewriteStrategy::insertion);
SkeinElement commutator(const SkeinElement& p, const SkeinElement& q);

/// {det(x,y)} (D_{x+y} - D_{x-y}), zero-vector terms dropped.
SkeinElement relation_rhs(const CurveClass& x, const CurveClass& y);

class GL2Matrix {
 public:
  /// Rows (m00 m01; m10 m11); throws DomainError unless det = +-1.
  GL2Matrix(std::int64_t m00, std::int64_t m01, std::int64_t m10, std::int64_t m11);
  static GL2Matrix identity() { return {1, 0, 0, 1}; }

  std::int64_t operator()(int r, int c) const { return m_[2 * r + c]; }
  std::int64_t det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  Vec2 apply(const Vec2& x) const { return {m_[0] * x.a + m_[1] * x.b, m_[2] * x.a + m_[3] * x.b}; }
  GL2Matrix operator*(const GL2Matrix& o) const;
  GL2Matrix inverse() const;

  bool operator==(const GL2Matrix&) const = default;

 private:
  std::int64_t m_[4];
};

/// Generators map x -> g x; det -1 matrices reverse every word.
SkeinElement gl2_apply(const GL2Matrix& g, const SkeinElement& p);

}  // namespace skein
