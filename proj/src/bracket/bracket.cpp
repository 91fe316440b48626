#include "skein/bracket.hpp"

#include "skein/detail/render.hpp"

namespace skein {

namespace {

void require_s_only(const RatFunc& c) {
  if (c.has_v()) throw DomainError("bracket coefficients must not involve v");
}

}  // namespace

BracketElement BracketElement::scalar(const RatFunc& c) {
  BracketElement e;
  e.add_unit(c);
  return e;
}

BracketElement BracketElement::generator(const CurveClass& x, const RatFunc& c) {
  BracketElement e;
  e.add_curve(x, c);
  return e;
}

BracketElement BracketElement::e(const Vec2& x, const RatFunc& c) {
  if (x.is_zero()) return scalar(RatFunc(2) * c);
  return generator(CurveClass::canonicalize(x), c);
}

RatFunc BracketElement::coeff(const CurveClass& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? RatFunc() : it->second;
}

void BracketElement::add_curve(const CurveClass& x, const RatFunc& c) {
  require_s_only(c);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void BracketElement::add_unit(const RatFunc& c) {
  require_s_only(c);
  unit_ += c;
}

BracketElement& BracketElement::operator+=(const BracketElement& o) {
  unit_ += o.unit_;
  for (const auto& [x, c] : o.terms_) add_curve(x, c);
  return *this;
}

BracketElement& BracketElement::operator-=(const BracketElement& o) {
  unit_ -= o.unit_;
  for (const auto& [x, c] : o.terms_) add_curve(x, -c);
  return *this;
}

BracketElement& BracketElement::operator*=(const RatFunc& c) {
  require_s_only(c);
  unit_ *= c;
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [x, k] : terms_) k *= c;
  return *this;
}

std::string BracketElement::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  if (!unit_.is_zero()) {
    out += detail::render_term("", unit_, true);
    first = false;
  }
  for (const auto& [x, c] : terms_) {
    out += detail::render_term("e[" + std::to_string(x.a()) + "," + std::to_string(x.b()) + "]", c, first);
    first = false;
  }
  return out;
}

BracketElement e_mul(const BracketElement& p, const BracketElement& q) {
  BracketElement r;
  r += p.unit_coeff() * q;
  for (const auto& [x, c] : p.curve_terms()) {
    if (!q.unit_coeff().is_zero()) r.add_curve(x, c * q.unit_coeff());
    for (const auto& [y, k] : q.curve_terms()) {
      const auto d = det(x.vec(), y.vec());
      const RatFunc ck = c * k;
      r += BracketElement::e(x.vec() + y.vec(), ck * RatFunc::s(static_cast<int>(d)));
      r += BracketElement::e(x.vec() - y.vec(), ck * RatFunc::s(static_cast<int>(-d)));
    }
  }
  return r;
}

BracketElement e_commutator(const BracketElement& p, const BracketElement& q) { return e_mul(p, q) - e_mul(q, p); }

BracketElement e_relation_rhs(const CurveClass& x, const CurveClass& y) {
  const auto d = static_cast<int>(det(x.vec(), y.vec()));
  const RatFunc c = RatFunc::s(d) - RatFunc::s(-d);
  return c * (BracketElement::e(x.vec() + y.vec()) - BracketElement::e(x.vec() - y.vec()));
}

BracketElement phi_map(const SkeinElement& p) {
  BracketElement r;
  for (const auto& [w, c] : p.terms()) {
    BracketElement prod = BracketElement::scalar(c.specialize_bracket());
    for (const CurveClass& x : w) prod = e_mul(prod, BracketElement::generator(x));
    r += prod;
  }
  return r;
}

LaurentPoly ChebPoly::substitute_x_plus_inverse() const {
  const LaurentPoly x = LaurentPoly::s(1) + LaurentPoly::s(-1);
  LaurentPoly out;
  for (auto i = coeffs.size(); i-- > 0;) {  // Horner
    out *= x;
    out += LaurentPoly(Rational(coeffs[i]));
  }
  return out;
}

std::string ChebPoly::to_string() const {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p += LaurentPoly::monomial(Rational(coeffs[i]), static_cast<int>(i), 0);
  std::string out = p.to_string();
  // The Laurent printer names the variable s.
  for (char& ch : out)
    if (ch == 's') ch = 'x';
  return out;
}

ChebPoly cheb(int n, ChebKind kind) {
  if (n < 0) throw DomainError("cheb requires n >= 0");
  std::vector<Integer> prev{kind == ChebKind::T ? Integer(2) : Integer(1)};
  std::vector<Integer> cur{Integer(0), Integer(1)};
  if (n == 0) return {prev};
  for (int k = 1; k < n; ++k) {
    std::vector<Integer> next(cur.size() + 1, Integer(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {cur};
}

bool cheb_functional_equation(int n, ChebKind kind) {
  const LaurentPoly lhs = cheb(n, kind).substitute_x_plus_inverse();
  if (kind == ChebKind::T) return lhs == LaurentPoly::s(n) + LaurentPoly::s(-n);
  return lhs * (LaurentPoly::s(1) - LaurentPoly::s(-1)) == LaurentPoly::s(n + 1) - LaurentPoly::s(-n - 1);
}

namespace {

using QPoly = std::vector<Rational>;  // polynomial in x
using Series = std::vector<QPoly>;     // index = power of t

QPoly to_qpoly(const ChebPoly& p) {
  QPoly out;
  for (const auto& c : p.coeffs) out.emplace_back(c);
  return out;
}

void add_scaled(QPoly& acc, const QPoly& p, const Rational& c) {
  if (acc.size() < p.size()) acc.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += c * p[i];
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Series series_mul(const Series& a, const Series& b, int N) {
  Series out(N + 1);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j) {
      if (a[i].empty() || b[j].empty()) continue;
      add_scaled(out[i + j], qmul(a[i], b[j]), Rational(1));
    }
  return out;
}

bool qpoly_equal(QPoly a, QPoly b) {
  auto trim = [](QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(a);
  trim(b);
  return a == b;
}

}  // namespace

bool cheb_log_identity_check(int N) {
  if (N < 1) throw DomainError("cheb_log_identity_check requires N >= 1");
  Series u(N + 1);
  for (int j = 1; j <= N; ++j) u[j] = to_qpoly(cheb(j, ChebKind::S));

  // ln(1 + u) = sum_{m>=1} (-1)^{m+1} u^m / m; u has no constant term.
  Series log(N + 1);
  Series power = u;
  for (int m = 1; m <= N; ++m) {
    const Rational c(m % 2 == 1 ? 1 : -1, m);
    for (int k = 0; k <= N; ++k) add_scaled(log[k], power[k], c);
    power = series_mul(power, u, N);
  }
  for (int k = 1; k <= N; ++k) {
    QPoly expected;
    add_scaled(expected, to_qpoly(cheb(k, ChebKind::T)), Rational(1, k));
    if (!qpoly_equal(expected, log[k])) return false;
  }
  return qpoly_equal(log[0], {});
}

}  // namespace skein
