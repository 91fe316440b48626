#include <algorithm>
#include <numeric>
#include <sstream>

#include "skein/detail/render.hpp"
#include "skein/torus.hpp"

namespace skein {

std::int64_t content(const Vec2& x) { return std::gcd(x.a, x.b); }

std::string to_string(const Vec2& x) { return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")"; }

CurveClass CurveClass::canonicalize(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw DomainError("zero vector is not a curve class");
  if (a < 0 || (a == 0 && b < 0)) return CurveClass(Vec2{-a, -b});
  return CurveClass(Vec2{a, b});
}

SkeinElement SkeinElement::scalar(const RatFunc& c) {
  SkeinElement e;
  e.add_term({}, c);
  return e;
}

SkeinElement SkeinElement::generator(const CurveClass& x) { return basis_word({x}); }

SkeinElement SkeinElement::basis_word(Word w, const RatFunc& c) {
  if (!std::is_sorted(w.begin(), w.end())) throw InternalError("basis_word: word is not sorted");
  SkeinElement e;
  e.add_term(w, c);
  return e;
}

RatFunc SkeinElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

std::size_t SkeinElement::max_word_length() const {
  std::size_t n = 0;
  for (const auto& [w, c] : terms_) n = std::max(n, w.size());
  return n;
}

bool SkeinElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

void SkeinElement::add_term(const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SkeinElement& SkeinElement::operator+=(const SkeinElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

SkeinElement& SkeinElement::operator-=(const SkeinElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

SkeinElement& SkeinElement::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

SkeinElement SkeinElement::operator-() const {
  SkeinElement r = *this;
  for (auto& [w, x] : r.terms_) x = -x;
  return r;
}

namespace {

std::string word_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += "D[" + std::to_string(w[i].a()) + "," + std::to_string(w[i].b()) + "]";
  }
  return out;
}

}  // namespace

std::string SkeinElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    out += detail::render_term(word_string(w), c, first);
    first = false;
  }
  return out;
}

}  // namespace skein
