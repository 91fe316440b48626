#include <algorithm>
#include <optional>

#include "skein/torus.hpp"

namespace skein {
namespace {

// Memoizes normal forms of words for the lifetime of one top-level call.
class Normalizer {
 public:
  explicit Normalizer(RewriteStrategy strategy) : strategy_(strategy) {}

  const SkeinElement& operator()(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    SkeinElement result = compute(w);
    return memo_.emplace(w, std::move(result)).first->second;
  }

 private:
  std::optional<std::size_t> find_inversion(const Word& w) const {
    if (w.size() < 2) return std::nullopt;
    if (strategy_ == RewriteStrategy::leftmost) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] < w[i]) return i;
    } else {
      for (std::size_t i = w.size() - 1; i-- > 0;)
        if (w[i + 1] < w[i]) return i;
    }
    return std::nullopt;
  }

  SkeinElement compute(const Word& w) {
    const auto inv = find_inversion(w);
    if (!inv) return SkeinElement::basis_word(w);
    const std::size_t i = *inv;
    const CurveClass y = w[i];
    const CurveClass x = w[i + 1];

    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    SkeinElement result = (*this)(swapped);

    const std::int64_t d = det(x.vec(), y.vec());
    if (d == 0) return result;
    const RatFunc c = qint(static_cast<int>(d));
    for (const auto& [z, sign] : {std::pair{x.vec() + y.vec(), -1}, std::pair{x.vec() - y.vec(), 1}}) {
      // x +- y = 0 forces d = 0, handled above.
      Word shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + i);
      shorter.push_back(CurveClass::canonicalize(z));
      shorter.insert(shorter.end(), w.begin() + i + 2, w.end());
      SkeinElement part = (*this)(shorter);
      part *= sign > 0 ? c : -c;
      result += part;
    }
    return result;
  }

  RewriteStrategy strategy_;
  std::map<Word, SkeinElement> memo_;
};

// Normal forms of words have coefficients in Z[s, s^-1], so the insertion
// normalizer works with dense integer polynomials in s and converts to
// RatFunc only at the end.
struct SPoly {
  int lo = 0;
  std::vector<Integer> c;  // c[i] multiplies s^(lo + i); empty means zero

  bool is_zero() const { return c.empty(); }

  void trim() {
    std::size_t first = 0;
    while (first < c.size() && c[first] == 0) ++first;
    if (first == c.size()) {
      c.clear();
      lo = 0;
      return;
    }
    while (c.back() == 0) c.pop_back();
    if (first > 0) {
      c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(first));
      lo += static_cast<int>(first);
    }
  }

  static SPoly one() { return {0, {Integer(1)}}; }

  /// {d} = s^d - s^-d, negated when `negate` is set.
  static SPoly brace(int d, bool negate) {
    const int a = std::abs(d);
    SPoly p{-a, std::vector<Integer>(static_cast<std::size_t>(2 * a + 1))};
    const int sign = (d > 0) != negate ? 1 : -1;
    p.c[2 * a] = sign;
    p.c[0] = -sign;
    return p;
  }

  /// this += a * b
  void addmul(const SPoly& a, const SPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    const int rlo = a.lo + b.lo;
    const int rhi = rlo + static_cast<int>(a.c.size() + b.c.size()) - 2;
    if (is_zero()) {
      lo = rlo;
      c = std::vector<Integer>(static_cast<std::size_t>(rhi - rlo + 1));
    } else {
      const int hi = lo + static_cast<int>(c.size()) - 1;
      const int nlo = std::min(lo, rlo), nhi = std::max(hi, rhi);
      if (nlo != lo || nhi != hi) {
        // Default-constructed mpz values do not allocate; moves are cheap.
        std::vector<Integer> grown(static_cast<std::size_t>(nhi - nlo + 1));
        for (std::size_t i = 0; i < c.size(); ++i) grown[static_cast<std::size_t>(lo - nlo) + i] = std::move(c[i]);
        c = std::move(grown);
        lo = nlo;
      }
    }
    const auto off = static_cast<std::size_t>(rlo - lo);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j)
        mpz_addmul(c[off + i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
    trim();
  }

  RatFunc to_ratfunc() const {
    LaurentPoly p;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) p += LaurentPoly::monomial(Rational(c[i]), lo + static_cast<int>(i), 0);
    return RatFunc(std::move(p));
  }
};

using IntElement = std::map<Word, SPoly>;

void add_scaled(IntElement& out, const IntElement& in, const SPoly& k) {
  for (const auto& [w, p] : in) {
    auto it = out.try_emplace(w).first;
    it->second.addmul(p, k);
    if (it->second.is_zero()) out.erase(it);
  }
}

// Insertion normalizer: multiplies a sorted word by one generator on the
// right.  With s = s' y sorted and x < y,
//   s' y x = (s' x) y - {det(x,y)} (s' D_{x+y} - s' D_{x-y}),
// and every recursive call has smaller total length except the insertion of
// y into the top-length term of s' x, which is sorted already.  The cache is
// per thread and keyed on (sorted word, letter).
class InsertionCache {
 public:
  const IntElement& insert(const Word& s, const CurveClass& x) {
    auto key = std::make_pair(s, x);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    IntElement result = compute(s, x);
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

  IntElement right_multiply(const IntElement& e, const CurveClass& x) {
    IntElement out;
    for (const auto& [t, k] : e) add_scaled(out, insert(t, x), k);
    return out;
  }

  /// Normal form of the word prefix * suffix where prefix is sorted.
  IntElement normal_form(const Word& prefix, const Word& suffix) {
    IntElement e{{prefix, SPoly::one()}};
    for (const CurveClass& x : suffix) e = right_multiply(e, x);
    return e;
  }

  void trim() {
    if (memo_.size() > kMaxEntries) memo_.clear();
  }

 private:
  static constexpr std::size_t kMaxEntries = 1 << 18;

  IntElement compute(const Word& s, const CurveClass& x) {
    if (s.empty() || !(x < s.back())) {
      Word w = s;
      w.push_back(x);
      return {{std::move(w), SPoly::one()}};
    }
    const CurveClass y = s.back();
    const Word head(s.begin(), s.end() - 1);
    IntElement result;
    for (const auto& [t, k] : insert(head, x)) add_scaled(result, insert(t, y), k);
    const std::int64_t d = det(x.vec(), y.vec());
    if (d == 0) return result;
    add_scaled(result, insert(head, CurveClass::canonicalize(x.vec() + y.vec())), SPoly::brace(static_cast<int>(d), true));
    add_scaled(result, insert(head, CurveClass::canonicalize(x.vec() - y.vec())), SPoly::brace(static_cast<int>(d), false));
    return result;
  }

  std::map<std::pair<Word, CurveClass>, IntElement> memo_;
};

InsertionCache& insertion_cache() {
  thread_local InsertionCache cache;
  cache.trim();
  return cache;
}

std::optional<SPoly> as_spoly(const RatFunc& f) {
  if (!f.den().is_constant() || f.den().coeff(0, 0) != 1) return std::nullopt;
  if (f.is_zero()) return SPoly{};
  const LaurentPoly& n = f.num();
  const Monomial lo = n.min_exponents();
  if (n.has_v()) return std::nullopt;
  SPoly p{lo.s, {}};
  for (const auto& [m, c] : n.terms()) {
    if (c.get_den() != 1) return std::nullopt;
    const auto i = static_cast<std::size_t>(m.s - lo.s);
    if (p.c.size() <= i) p.c.resize(i + 1);
    p.c[i] = c.get_num();
  }
  return p;
}

std::optional<IntElement> as_int_element(const SkeinElement& e) {
  IntElement out;
  for (const auto& [w, c] : e.terms()) {
    auto p = as_spoly(c);
    if (!p) return std::nullopt;
    out.emplace(w, std::move(*p));
  }
  return out;
}

void accumulate(SkeinElement& out, const IntElement& e, const RatFunc& c) {
  for (const auto& [w, p] : e) out.add_term(w, c.is_one() ? p.to_ratfunc() : c * p.to_ratfunc());
}

}  // namespace

SkeinElement normal_form(const Word& w, RewriteStrategy strategy) {
  if (strategy == RewriteStrategy::insertion) {
    SkeinElement out;
    accumulate(out, insertion_cache().normal_form({}, w), RatFunc(1));
    return out;
  }
  Normalizer nf(strategy);
  return nf(w);
}

SkeinElement multiply(const SkeinElement& p, const SkeinElement& q, RewriteStrategy strategy) {
  if (strategy == RewriteStrategy::insertion) {
    InsertionCache& cache = insertion_cache();
    SkeinElement result;
    const auto ip = as_int_element(p), iq = as_int_element(q);
    if (ip && iq) {
      IntElement acc;
      for (const auto& [wp, cp] : *ip)
        for (const auto& [wq, cq] : *iq) {
          SPoly k;
          k.addmul(cp, cq);
          add_scaled(acc, cache.normal_form(wp, wq), k);
        }
      accumulate(result, acc, RatFunc(1));
      return result;
    }
    for (const auto& [wp, cp] : p.terms())
      for (const auto& [wq, cq] : q.terms()) accumulate(result, cache.normal_form(wp, wq), cp * cq);
    return result;
  }
  Normalizer nf(strategy);
  SkeinElement result;
  for (const auto& [wp, cp] : p.terms()) {
    for (const auto& [wq, cq] : q.terms()) {
      Word w = wp;
      w.insert(w.end(), wq.begin(), wq.end());
      SkeinElement part = nf(w);
      part *= cp * cq;
      result += part;
    }
  }
  return result;
}

SkeinElement commutator(const SkeinElement& p, const SkeinElement& q) { return multiply(p, q) - multiply(q, p); }

SkeinElement relation_rhs(const CurveClass& x, const CurveClass& y) {
  SkeinElement r;
  const std::int64_t d = det(x.vec(), y.vec());
  if (d == 0) return r;
  const RatFunc c = qint(static_cast<int>(d));
  r.add_term({CurveClass::canonicalize(x.vec() + y.vec())}, c);
  r.add_term({CurveClass::canonicalize(x.vec() - y.vec())}, -c);
  return r;
}

GL2Matrix::GL2Matrix(std::int64_t m00, std::int64_t m01, std::int64_t m10, std::int64_t m11)
    : m_{m00, m01, m10, m11} {
  const std::int64_t d = det();
  if (d != 1 && d != -1) throw DomainError("GL2Matrix requires determinant +-1");
}

GL2Matrix GL2Matrix::operator*(const GL2Matrix& o) const {
  return {m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
          m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]};
}

GL2Matrix GL2Matrix::inverse() const {
  const std::int64_t d = det();
  return {d * m_[3], -d * m_[1], -d * m_[2], d * m_[0]};
}

SkeinElement gl2_apply(const GL2Matrix& g, const SkeinElement& p) {
  InsertionCache& cache = insertion_cache();
  SkeinElement result;
  for (const auto& [w, c] : p.terms()) {
    Word image;
    image.reserve(w.size());
    for (const auto& x : w) image.push_back(CurveClass::canonicalize(g.apply(x.vec())));
    if (g.det() == -1) std::reverse(image.begin(), image.end());
    accumulate(result, cache.normal_form({}, image), c);
  }
  return result;
}

}  // namespace skein
