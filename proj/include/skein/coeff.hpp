#pragma once

// Exact arithmetic in Q(s,v).
//
// LaurentPoly is a sparse polynomial in s^{+-1}, v^{+-1} with rational
// coefficients.  RatFunc is a quotient of two of them kept in a canonical
// form, so that structural equality decides equality in the field:
//
//   * the denominator is an integer polynomial (no negative exponents),
//     primitive, not divisible by s or v, with positive coefficient on its
//     lex-greatest monomial;
//   * numerator and denominator share no non-unit polynomial factor.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "skein/error.hpp"

namespace skein {

using Rational = mpq_class;
using Integer = mpz_class;

struct Monomial {
  int s = 0;
  int v = 0;
  auto operator<=>(const Monomial&) const = default;
};

class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: integer literals are constants
  explicit LaurentPoly(const Rational& c);

  static LaurentPoly monomial(const Rational& c, int es, int ev);
  static LaurentPoly s(int e = 1) { return monomial(1, e, 0); }
  static LaurentPoly v(int e = 1) { return monomial(1, 0, e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of s^es v^ev (zero when absent).
  Rational coeff(int es, int ev) const;
  /// Largest monomial under lex order on (exp_s, exp_v); requires nonzero.
  std::pair<Monomial, Rational> leading() const;
  /// Componentwise minimum exponents; requires nonzero.
  Monomial min_exponents() const;
  int degree_v_span() const;
  bool has_v() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Multiply by s^es v^ev.
  LaurentPoly shifted(int es, int ev) const;
  LaurentPoly pow(unsigned n) const;

  /// s -> 1/s, v -> 1/v.
  LaurentPoly bar() const;
  /// v -> -s^{-3}.
  LaurentPoly specialize_bracket() const;

  Rational evaluate(const Rational& s0, const Rational& v0) const;

  /// Lcm of coefficient denominators.
  Integer denominator_lcm() const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT
  explicit RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(LaurentPoly num);  // NOLINT: polynomials embed in the field
  /// Canonicalizing constructor; throws DomainError when den is zero.
  RatFunc(LaurentPoly num, LaurentPoly den);

  static RatFunc s(int e = 1) { return RatFunc(LaurentPoly::s(e)); }
  static RatFunc v(int e = 1) { return RatFunc(LaurentPoly::v(e)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_.is_constant(); }
  bool has_v() const { return num_.has_v() || den_.has_v(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc inverse() const;
  /// Integer power; negative exponents invert (throws on 0^-n).
  RatFunc pow(int n) const;

  RatFunc bar() const;
  RatFunc specialize_bracket() const;
  Rational evaluate(const Rational& s0, const Rational& v0) const;

  std::string to_string() const;

 private:
  struct Canonical {};
  RatFunc(Canonical, LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {}
  LaurentPoly num_;
  LaurentPoly den_;
};

enum class OpKind { add, sub, mul, div };
RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, OpKind op);

enum class QIntKind { brace, brace_plus, bracket };

/// {n} = s^n - s^-n, {n}+ = s^n + s^-n, [n] = {n}/{1}.
RatFunc qint(int n, QIntKind kind = QIntKind::brace);

/// Unknot value 1 - (v - v^-1)/(s - s^-1).
RatFunc delta();

/// beta_n = (1 - s^2)/(s^(2n-1) v^-1 - 1), or its bar image.
RatFunc beta(int n, bool barred = false);

inline RatFunc bar_involution(const RatFunc& f) { return f.bar(); }
inline RatFunc specialize_bracket(const RatFunc& f) { return f.specialize_bracket(); }
inline Rational eval_rational(const RatFunc& f, const Rational& s0, const Rational& v0) {
  return f.evaluate(s0, v0);
}

/// Randomized equality oracle: compares a and b at `points` pseudo-random
/// rational points (seeded), skipping points where either side has a pole.
bool agree_at_random_points(const RatFunc& a, const RatFunc& b, std::uint64_t seed,
                            int points = 5);

}  // namespace skein
