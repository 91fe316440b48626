#include <algorithm>

#include "poly_gcd.hpp"
#include "skein/coeff.hpp"
#include "skein/prng.hpp"

namespace skein {
namespace {

using detail::BPoly;
using detail::UPoly;

// Requires nonnegative exponents.
BPoly to_bpoly(const LaurentPoly& p) {
  BPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (m.s < 0 || m.v < 0 || c.get_den() != 1) throw InternalError("to_bpoly: not an integer polynomial");
    if (r.size() <= static_cast<std::size_t>(m.v)) r.resize(m.v + 1);
    UPoly& row = r[m.v];
    if (row.size() <= static_cast<std::size_t>(m.s)) row.resize(m.s + 1);
    row[m.s] = c.get_num();
  }
  detail::trim(r);
  return r;
}

LaurentPoly from_bpoly(const BPoly& b) {
  LaurentPoly r;
  for (std::size_t ev = 0; ev < b.size(); ++ev)
    for (std::size_t es = 0; es < b[ev].size(); ++es)
      if (b[ev][es] != 0) r += LaurentPoly::monomial(Rational(b[ev][es]), static_cast<int>(es), static_cast<int>(ev));
  return r;
}

bool is_unit_constant(const BPoly& b) { return b.size() == 1 && b[0].size() == 1; }

}  // namespace

RatFunc::RatFunc(LaurentPoly num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw DomainError("division by zero in Q(s,v)");
  if (num.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  Integer l;
  mpz_lcm(l.get_mpz_t(), num.denominator_lcm().get_mpz_t(), den.denominator_lcm().get_mpz_t());
  if (l != 1) {
    num *= Rational(l);
    den *= Rational(l);
  }
  const Monomial dm = den.min_exponents();
  num = num.shifted(-dm.s, -dm.v);
  den = den.shifted(-dm.s, -dm.v);

  if (!den.is_monomial()) {
    const Monomial nm = num.min_exponents();
    BPoly nb = to_bpoly(num.shifted(-nm.s, -nm.v));
    BPoly db = to_bpoly(den);
    const BPoly g = detail::gcd(nb, db);
    if (!is_unit_constant(g)) {
      nb = detail::divexact(nb, g);
      db = detail::divexact(db, g);
      num = from_bpoly(nb).shifted(nm.s, nm.v);
      den = from_bpoly(db);
    }
  }

  // den is now an integer polynomial coprime to num and to s, v.
  Rational unit;
  if (den.is_monomial()) {
    unit = den.leading().second;
  } else {
    Integer c = 0;
    for (const auto& [m, x] : den.terms()) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_num_mpz_t());
    unit = Rational(c);
    if (den.leading().second < 0) unit = -unit;
  }
  const Rational inv = Rational(1) / unit;
  num *= inv;
  den *= inv;
  num_ = std::move(num);
  den_ = std::move(den);
}

bool RatFunc::is_one() const { return den_.is_constant() && num_ == LaurentPoly(1); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (is_polynomial() && o.is_polynomial()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = RatFunc(num_ + o.num_, den_);
  return *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  if (o.num_.is_monomial() && o.is_polynomial() && !is_polynomial()) {
    // Multiplying by c*s^i*v^j keeps den coprime to num.
    num_ *= o.num_;
    return *this;
  }
  return *this = RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const { return RatFunc(Canonical{}, -num_, den_); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(s,v)");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  if (is_polynomial()) return RatFunc(Canonical{}, num_.pow(static_cast<unsigned>(n)), den_);
  // Powers of coprime polynomials stay coprime.
  return RatFunc(Canonical{}, num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

RatFunc RatFunc::specialize_bracket() const {
  LaurentPoly d = den_.specialize_bracket();
  if (d.is_zero()) throw DomainError("denominator vanishes under v = -s^-3");
  return RatFunc(num_.specialize_bracket(), std::move(d));
}

Rational RatFunc::evaluate(const Rational& s0, const Rational& v0) const {
  const Rational d = den_.evaluate(s0, v0);
  if (d == 0) throw DomainError("evaluation at a pole");
  return num_.evaluate(s0, v0) / d;
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  return n + "/(" + den_.to_string() + ")";
}

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, OpKind op) {
  switch (op) {
    case OpKind::add:
      return a + b;
    case OpKind::sub:
      return a - b;
    case OpKind::mul:
      return a * b;
    case OpKind::div:
      return a / b;
  }
  throw InternalError("ratfunc_arith: unknown op");
}

RatFunc qint(int n, QIntKind kind) {
  const LaurentPoly brace = LaurentPoly::s(n) - LaurentPoly::s(-n);
  switch (kind) {
    case QIntKind::brace:
      return RatFunc(brace);
    case QIntKind::brace_plus:
      return RatFunc(LaurentPoly::s(n) + LaurentPoly::s(-n));
    case QIntKind::bracket:
      return RatFunc(brace, LaurentPoly::s(1) - LaurentPoly::s(-1));
  }
  throw InternalError("qint: unknown kind");
}

RatFunc delta() {
  return RatFunc(1) - RatFunc(LaurentPoly::v(1) - LaurentPoly::v(-1), LaurentPoly::s(1) - LaurentPoly::s(-1));
}

RatFunc beta(int n, bool barred) {
  if (n < 1) throw DomainError("beta_n requires n >= 1");
  RatFunc b(LaurentPoly(1) - LaurentPoly::s(2), LaurentPoly::monomial(1, 2 * n - 1, -1) - LaurentPoly(1));
  return barred ? b.bar() : b;
}

bool agree_at_random_points(const RatFunc& a, const RatFunc& b, std::uint64_t seed, int points) {
  SplitMix64 rng(seed);
  int checked = 0;
  for (int attempt = 0; checked < points && attempt < 50 * points; ++attempt) {
    std::int64_t sn = rng.uniform(-9, 9), sd = rng.uniform(1, 7);
    std::int64_t vn = rng.uniform(-9, 9), vd = rng.uniform(1, 7);
    if (sn == 0 || vn == 0) continue;
    Rational s0(static_cast<long>(sn), static_cast<unsigned long>(sd));
    Rational v0(static_cast<long>(vn), static_cast<unsigned long>(vd));
    s0.canonicalize();
    v0.canonicalize();
    try {
      if (a.evaluate(s0, v0) != b.evaluate(s0, v0)) return false;
      ++checked;
    } catch (const DomainError&) {
      // pole; draw another point
    }
  }
  return checked == points;
}

}  // namespace skein
