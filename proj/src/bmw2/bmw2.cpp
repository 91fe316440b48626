#include "skein/bmw2.hpp"

#include <array>

#include "skein/detail/render.hpp"

namespace skein {

BMW2Element& BMW2Element::operator+=(const BMW2Element& o) {
  one += o.one;
  sigma += o.sigma;
  h += o.h;
  return *this;
}

BMW2Element& BMW2Element::operator-=(const BMW2Element& o) {
  one -= o.one;
  sigma -= o.sigma;
  h -= o.h;
  return *this;
}

BMW2Element& BMW2Element::operator*=(const RatFunc& c) {
  one *= c;
  sigma *= c;
  h *= c;
  return *this;
}

std::string BMW2Element::to_string() const {
  std::string out;
  bool first = true;
  auto put = [&](const std::string& basis, const RatFunc& c) {
    if (c.is_zero()) return;
    out += detail::render_term(basis, c, first);
    first = false;
  };
  put("", one);
  put("sigma", sigma);
  put("h", h);
  return first ? "0" : out;
}

BMW2Element bmw2_mul(const BMW2Element& x, const BMW2Element& y) {
  const RatFunc z = qint(1);
  const RatFunc v = RatFunc::v(1);
  BMW2Element r;
  // 1 * anything
  r += x.one * y;
  // sigma * 1, sigma * sigma, sigma * h
  r.sigma += x.sigma * y.one;
  r.one += x.sigma * y.sigma;
  r.sigma += x.sigma * y.sigma * z;
  r.h -= x.sigma * y.sigma * z * v;
  r.h += x.sigma * y.h * v;
  // h * 1, h * sigma, h * h
  r.h += x.h * y.one;
  r.h += x.h * y.sigma * v;
  r.h += x.h * y.h * delta();
  return r;
}

BMW2Element sigma_inverse() {
  const RatFunc z = qint(1);
  return {-z, RatFunc(1), z};
}

BMW2Element bmw2_inverse(const BMW2Element& x) {
  // Solve x * y = 1: columns are x * (basis element).
  const std::array<BMW2Element, 3> cols = {bmw2_mul(x, BMW2Element::unit()), bmw2_mul(x, BMW2Element::sigma_gen()),
                                           bmw2_mul(x, BMW2Element::h_gen())};
  std::array<std::array<RatFunc, 4>, 3> m;
  for (int j = 0; j < 3; ++j) {
    m[0][j] = cols[j].one;
    m[1][j] = cols[j].sigma;
    m[2][j] = cols[j].h;
  }
  m[0][3] = RatFunc(1);
  m[1][3] = RatFunc();
  m[2][3] = RatFunc();
  for (int col = 0; col < 3; ++col) {
    int pivot = -1;
    for (int row = col; row < 3; ++row)
      if (!m[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw DomainError("BMW2 element is not invertible");
    std::swap(m[col], m[pivot]);
    const RatFunc inv = m[col][col].inverse();
    for (int j = col; j < 4; ++j) m[col][j] *= inv;
    for (int row = 0; row < 3; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const RatFunc f = m[row][col];
      for (int j = col; j < 4; ++j) m[row][j] -= f * m[col][j];
    }
  }
  BMW2Element y{m[0][3], m[1][3], m[2][3]};
  // A finite-dimensional algebra's right inverse is two-sided; verify anyway.
  if (bmw2_mul(y, x) != BMW2Element::unit()) throw InternalError("BMW2 inverse is not two-sided");
  return y;
}

BMW2Element project_hecke(const BMW2Element& x) { return {x.one, x.sigma, RatFunc()}; }

BMW2Element p1_plus() { return {RatFunc(1), RatFunc(), -delta().inverse()}; }

BMW2Element section_s2(const BMW2Element& x) {
  if (!x.h.is_zero()) throw DomainError("section_s2 expects an element of span{1, sigma}");
  const BMW2Element p = p1_plus();
  return bmw2_mul(bmw2_mul(p, x), p);
}

BMW2Element p2_element() {
  const RatFunc denom = qint(1, QIntKind::brace_plus).inverse();
  return denom * (BMW2Element::sigma_gen() + sigma_inverse());
}

BMW2Element z2_element() {
  const RatFunc denom = (RatFunc::s(2) + RatFunc(1)).inverse();
  return denom * BMW2Element{RatFunc(1), RatFunc::s(1), RatFunc()};
}

BMW2Element f2_closed_form() {
  const RatFunc denom = (RatFunc::s(2) + RatFunc(1)).inverse();
  return denom * BMW2Element{RatFunc(1), RatFunc::s(1), beta(1)};
}

BMW2Element b2_closed_form() {
  const RatFunc vv = RatFunc::v(1) + RatFunc::v(-1);
  const RatFunc ss = qint(1, QIntKind::brace_plus);
  return p2_element() - (vv / ss / delta()) * BMW2Element::h_gen();
}

bool f2_checks() {
  const BMW2Element f2 = section_s2(z2_element());
  const BMW2Element sigma = BMW2Element::sigma_gen();
  const BMW2Element h = BMW2Element::h_gen();
  const RatFunc s = RatFunc::s(1);
  return f2 == f2_closed_form() && bmw2_mul(f2, f2) == f2 && bmw2_mul(f2, sigma) == s * f2 &&
         bmw2_mul(sigma, f2) == s * f2 && bmw2_mul(f2, h) == BMW2Element{} && bmw2_mul(h, f2) == BMW2Element{};
}

}  // namespace skein
