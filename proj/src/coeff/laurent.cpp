#include <algorithm>
#include <sstream>

#include "skein/coeff.hpp"

namespace skein {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{0, 0}, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{0, 0}, c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int es, int ev) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(Monomial{es, ev}, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Rational LaurentPoly::coeff(int es, int ev) const {
  auto it = terms_.find(Monomial{es, ev});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Monomial, Rational> LaurentPoly::leading() const {
  if (terms_.empty()) throw InternalError("leading term of zero polynomial");
  return *terms_.rbegin();
}

Monomial LaurentPoly::min_exponents() const {
  if (terms_.empty()) throw InternalError("min exponents of zero polynomial");
  Monomial m = terms_.begin()->first;
  for (const auto& [mono, c] : terms_) {
    m.s = std::min(m.s, mono.s);
    m.v = std::min(m.v, mono.v);
  }
  return m;
}

int LaurentPoly::degree_v_span() const {
  if (terms_.empty()) return 0;
  int lo = terms_.begin()->first.v, hi = lo;
  for (const auto& [mono, c] : terms_) {
    lo = std::min(lo, mono.v);
    hi = std::max(hi, mono.v);
  }
  return hi - lo;
}

bool LaurentPoly::has_v() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.v != 0; });
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

namespace {

bool integral(const LaurentPoly::TermMap& t) {
  for (const auto& [m, c] : t)
    if (c.get_den() != 1) return false;
  return true;
}

}  // namespace

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (integral(a.terms_) && integral(b.terms_)) {
    // Integer products skip the gcd that every mpq multiplication performs.
    std::map<Monomial, Integer> acc;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Integer& slot = acc[Monomial{ma.s + mb.s, ma.v + mb.v}];
        mpz_addmul(slot.get_mpz_t(), ca.get_num_mpz_t(), cb.get_num_mpz_t());
      }
    for (auto& [m, c] : acc)
      if (c != 0) r.terms_.emplace_hint(r.terms_.end(), m, Rational(c));
    return r;
  }
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(Monomial{ma.s + mb.s, ma.v + mb.v}, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, x] : r.terms_) x = -x;
  return r;
}

LaurentPoly LaurentPoly::shifted(int es, int ev) const {
  if (es == 0 && ev == 0) return *this;
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), Monomial{m.s + es, m.v + ev}, c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{-m.s, -m.v}, c);
  return r;
}

LaurentPoly LaurentPoly::specialize_bracket() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.add_term(Monomial{m.s - 3 * m.v, 0}, (m.v % 2 == 0) ? c : Rational(-c));
  return r;
}

namespace {

Rational rational_pow(const Rational& x, int e) {
  Rational base = e >= 0 ? x : Rational(1) / x;
  unsigned n = static_cast<unsigned>(e >= 0 ? e : -e);
  Rational r = 1;
  while (n) {
    if (n & 1u) r *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return r;
}

}  // namespace

Rational LaurentPoly::evaluate(const Rational& s0, const Rational& v0) const {
  if (s0 == 0 || v0 == 0) throw DomainError("Laurent polynomial evaluated at s = 0 or v = 0");
  Rational r = 0;
  for (const auto& [m, c] : terms_) r += c * rational_pow(s0, m.s) * rational_pow(v0, m.v);
  return r;
}

Integer LaurentPoly::denominator_lcm() const {
  Integer l = 1;
  for (const auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

namespace {

void append_var(std::ostringstream& os, bool& first, char name, int e) {
  if (e == 0) return;
  if (!first) os << '*';
  first = false;
  os << name;
  if (e != 1) os << '^' << e;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first_term) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first_term = false;
    const bool is_unit_mono = (m.s == 0 && m.v == 0);
    if (is_unit_mono) {
      os << mag.get_str();
      continue;
    }
    bool first_factor = true;
    if (mag != 1) {
      os << mag.get_str();
      first_factor = false;
    }
    append_var(os, first_factor, 's', m.s);
    append_var(os, first_factor, 'v', m.v);
  }
  return os.str();
}

}  // namespace skein
