#include "skein/suite.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>

#include "skein/prng.hpp"

namespace skein {

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using CheckFn = std::function<Outcome(SplitMix64&, const SuiteLimits&)>;

struct CheckDef {
  std::string suite;
  std::string name;
  CheckFn fn;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string counted(std::size_t n, const std::string& what, std::size_t bad = 0) {
  std::string out = std::to_string(n) + " " + what;
  if (bad) out += ", " + std::to_string(bad) + " failed";
  return out;
}

// ---- random samples ------------------------------------------------------

Vec2 random_vec(SplitMix64& rng, int box) {
  for (;;) {
    Vec2 x{rng.uniform(-box, box), rng.uniform(-box, box)};
    if (!x.is_zero()) return x;
  }
}

CurveClass random_class(SplitMix64& rng, int box) { return CurveClass::canonicalize(random_vec(rng, box)); }

Word random_word(SplitMix64& rng, int max_len, int box) {
  Word w;
  const auto len = rng.uniform(0, max_len);
  for (std::int64_t i = 0; i < len; ++i) w.push_back(random_class(rng, box));
  return w;
}

LaurentPoly random_laurent(SplitMix64& rng, int max_terms, bool with_v = true) {
  LaurentPoly p;
  const auto n = rng.uniform(1, max_terms);
  for (std::int64_t i = 0; i < n; ++i) {
    const auto c = rng.uniform(-3, 3);
    const auto es = rng.uniform(-2, 2);
    const auto ev = with_v ? rng.uniform(-2, 2) : 0;
    p += LaurentPoly::monomial(Rational(c), static_cast<int>(es), static_cast<int>(ev));
  }
  return p;
}

RatFunc random_ratfunc(SplitMix64& rng) {
  LaurentPoly den;
  while (den.is_zero()) den = random_laurent(rng, 3);
  return RatFunc(random_laurent(rng, 3), den);
}

RatFunc random_monomial_coeff(SplitMix64& rng) {
  std::int64_t c = 0;
  while (c == 0) c = rng.uniform(-3, 3);
  return RatFunc(LaurentPoly::monomial(Rational(c), static_cast<int>(rng.uniform(-2, 2)),
                                       static_cast<int>(rng.uniform(-2, 2))));
}

SkeinElement random_skein(SplitMix64& rng, int max_terms, int max_len, int box) {
  SkeinElement e;
  const auto n = rng.uniform(1, max_terms);
  for (std::int64_t i = 0; i < n; ++i) e += random_monomial_coeff(rng) * normal_form(random_word(rng, max_len, box));
  return e;
}

GL2Matrix random_gl2(SplitMix64& rng) {
  static const GL2Matrix gens[] = {{1, 1, 0, 1}, {1, 0, 1, 1}, {0, -1, 1, 0}, {1, 0, 0, -1}, {1, -1, 0, 1}};
  GL2Matrix g = GL2Matrix::identity();
  const auto n = rng.uniform(0, 6);
  for (std::int64_t i = 0; i < n; ++i) g = gens[rng.uniform(0, 4)] * g;
  return g;
}

std::vector<CurveClass> classes_in_box(int box) {
  std::vector<CurveClass> out;
  for (int a = -box; a <= box; ++a)
    for (int b = -box; b <= box; ++b)
      if (a != 0 || b != 0) {
        const CurveClass c = CurveClass::canonicalize(a, b);
        if (c.a() == a && c.b() == b) out.push_back(c);
      }
  return out;
}

SkeinElement bracket_of(const CurveClass& x, const CurveClass& y) { return commutator(generator(x), generator(y)); }

// ---- field ---------------------------------------------------------------

Outcome field_ring_identities(SplitMix64&, const SuiteLimits& L) {
  const RatFunc s = RatFunc::s(1), si = RatFunc::s(-1);
  for (int n = 1; n <= L.ring_n; ++n) {
    if (s - si * beta(n) != si - s * beta(n, true)) return {false, "first identity fails at n=" + std::to_string(n)};
    if ((beta(n + 1, true) - beta(n + 1)) * (s - si * beta(n)) != -qint(1))
      return {false, "second identity fails at n=" + std::to_string(n)};
  }
  return {true, "n=1.." + std::to_string(L.ring_n)};
}

Outcome field_axioms(SplitMix64& rng, const SuiteLimits& L) {
  std::size_t bad = 0;
  for (int i = 0; i < L.field_samples; ++i) {
    const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c || a * b != b * a)
      ++bad;
    else if (!b.is_zero() && (a / b) * b != a)
      ++bad;
  }
  return {bad == 0, counted(L.field_samples, "random triples", bad)};
}

Outcome field_bar(SplitMix64& rng, const SuiteLimits& L) {
  std::size_t bad = 0;
  for (int i = 0; i < L.field_samples; ++i) {
    const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
    if ((a * b).bar() != a.bar() * b.bar() || (a + b).bar() != a.bar() + b.bar() || a.bar().bar() != a) ++bad;
  }
  for (int n = 1; n <= 6; ++n)
    if (qint(n).bar() != -qint(n)) ++bad;
  if (delta().bar() != delta()) ++bad;
  return {bad == 0, counted(L.field_samples, "random pairs", bad)};
}

Outcome field_constants(SplitMix64&, const SuiteLimits&) {
  const RatFunc s = RatFunc::s(1), si = RatFunc::s(-1);
  bool ok = qint(3, QIntKind::bracket) == RatFunc::s(2) + RatFunc(1) + RatFunc::s(-2);
  ok = ok && (s - si) * (s + si) == qint(2);
  ok = ok && qint(2) / qint(1) == qint(1, QIntKind::brace_plus);
  ok = ok && delta() == RatFunc(1) - (RatFunc::v(1) - RatFunc::v(-1)) / (s - si);
  ok = ok && beta(1) == (RatFunc(1) - RatFunc::s(2)) / (s * RatFunc::v(-1) - RatFunc(1));
  ok = ok && specialize_bracket(delta()) == -RatFunc::s(2) - RatFunc::s(-2);
  ok = ok && specialize_bracket(RatFunc::v(-1)) == -RatFunc::s(3);
  return {ok, "quantum integers, delta, beta_1, specializations"};
}

Outcome field_random_oracle(SplitMix64& rng, const SuiteLimits& L) {
  std::size_t bad = 0;
  for (int i = 0; i < L.field_samples; ++i) {
    const RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
    const RatFunc lhs = (a + b) * (a - b), rhs = a * a - b * b;
    if (lhs != rhs || !agree_at_random_points(lhs, rhs, rng.next())) ++bad;
    if (a != b && agree_at_random_points(a, b, rng.next(), 8)) ++bad;
  }
  return {bad == 0, counted(L.field_samples, "random pairs", bad)};
}

// ---- torus ---------------------------------------------------------------

Outcome torus_presentation(SplitMix64&, const SuiteLimits& L) {
  const auto cls = classes_in_box(L.relation_box);
  std::size_t n = 0, bad = 0;
  for (const auto& x : cls)
    for (const auto& y : cls) {
      ++n;
      if (bracket_of(x, y) != relation_rhs(x, y)) ++bad;
    }
  return {bad == 0, counted(n, "ordered pairs", bad)};
}

Outcome torus_associativity(SplitMix64& rng, const SuiteLimits& L) {
  std::size_t bad = 0;
  for (int i = 0; i < L.assoc_samples; ++i) {
    const SkeinElement p = normal_form(random_word(rng, L.assoc_word_len, L.assoc_box));
    const SkeinElement q = normal_form(random_word(rng, L.assoc_word_len, L.assoc_box));
    const SkeinElement r = normal_form(random_word(rng, L.assoc_word_len, L.assoc_box));
    if (multiply(multiply(p, q), r) != multiply(p, multiply(q, r))) ++bad;
  }
  return {bad == 0, counted(L.assoc_samples, "random triples", bad)};
}

Outcome torus_strategy(SplitMix64& rng, const SuiteLimits& L) {
  std::size_t bad = 0;
  for (int i = 0; i < L.strategy_samples; ++i) {
    const Word w = random_word(rng, 5, L.assoc_box);
    const SkeinElement ref = normal_form(w, RewriteStrategy::insertion);
    if (normal_form(w, RewriteStrategy::leftmost) != ref || normal_form(w, RewriteStrategy::rightmost) != ref) ++bad;
  }
  return {bad == 0, counted(L.strategy_samples, "random words", bad)};
}

Outcome torus_jacobi(SplitMix64&, const SuiteLimits& L) {
  const auto cls = classes_in_box(L.jacobi_box);
  std::size_t n = 0, bad = 0;
  for (const auto& x : cls)
    for (const auto& y : cls)
      for (const auto& z : cls) {
        ++n;
        const SkeinElement gx = generator(x), gy = generator(y), gz = generator(z);
        const SkeinElement j = commutator(commutator(gx, gy), gz) + commutator(commutator(gy, gz), gx) +
                               commutator(commutator(gz, gx), gy);
        if (!j.is_zero()) ++bad;
      }
  return {bad == 0, counted(n, "generator triples", bad)};
}

Outcome torus_lie_closure(SplitMix64&, const SuiteLimits& L) {
  const auto cls = classes_in_box(L.jacobi_box);
  std::size_t n = 0, bad = 0;
  for (const auto& x : cls)
    for (const auto& y : cls) {
      ++n;
      if (bracket_of(x, y).max_word_length() > 1) ++bad;
    }
  return {bad == 0, counted(n, "generator pairs", bad)};
}

Outcome torus_gl2(SplitMix64& rng, const SuiteLimits& L) {
  std::size_t bad = 0;
  for (int i = 0; i < L.gl2_samples; ++i) {
    const GL2Matrix g = random_gl2(rng);
    const SkeinElement p = random_skein(rng, 2, 2, 2), q = random_skein(rng, 2, 2, 2);
    const SkeinElement gp = gl2_apply(g, p), gq = gl2_apply(g, q);
    const SkeinElement expect = g.det() == 1 ? multiply(gp, gq) : multiply(gq, gp);
    if (gl2_apply(g, multiply(p, q)) != expect) ++bad;
    if (gl2_apply(g.inverse(), gp) != p) ++bad;
  }
  return {bad == 0, counted(L.gl2_samples, "random matrices", bad)};
}

// ---- certificates --------------------------------------------------------

// Normal-position representatives x = (p,q), y = (0,r): every pair with
// nonzero det is GL2-equivalent to one of these (possibly swapped).
std::vector<std::pair<Vec2, Vec2>> normal_representatives(int max_det) {
  std::vector<std::pair<Vec2, Vec2>> out;
  for (std::int64_t p = 1; p <= max_det; ++p)
    for (std::int64_t r = 1; p * r <= max_det; ++r)
      for (std::int64_t q = 0; q < p; ++q)
        if (std::gcd(p, q) <= r) out.push_back({Vec2{p, q}, Vec2{0, r}});
  return out;
}

Outcome cert_representatives(SplitMix64& rng, const SuiteLimits& L) {
  std::size_t n = 0, bad = 0;
  std::string first;
  for (const auto& [x, y] : normal_representatives(L.max_det)) {
    // Each representative as given and under a random GL2 move.
    const GL2Matrix g = random_gl2(rng);
    for (const auto& [cx, cy] : {std::pair{x, y}, std::pair{g.apply(x), g.apply(y)}}) {
      ++n;
      const ValidationResult r = check_certificate(build_certificate(cx, cy));
      if (!r.ok) {
        if (!bad) first = "(" + to_string(cx) + "," + to_string(cy) + ") " + r.path + ": " + r.reason;
        ++bad;
      }
    }
  }
  return {bad == 0, counted(n, "pairs", bad) + (bad ? "; first: " + first : "")};
}

Outcome cert_box(SplitMix64&, const SuiteLimits& L) {
  std::size_t n = 0, bad = 0;
  const int B = L.cert_box;
  for (int a = -B; a <= B; ++a)
    for (int b = -B; b <= B; ++b)
      for (int c = -B; c <= B; ++c)
        for (int d = -B; d <= B; ++d) {
          const Vec2 x{a, b}, y{c, d};
          if (x.is_zero() || y.is_zero() || std::llabs(det(x, y)) > L.max_det) continue;
          ++n;
          if (!validate_certificate(build_certificate(x, y))) ++bad;
        }
  return {bad == 0, counted(n, "pairs", bad)};
}

Outcome cert_diophantine(SplitMix64&, const SuiteLimits& L) {
  std::size_t n = 0, bad = 0;
  for (std::int64_t p = 2; p <= L.max_det; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++n;
      const auto d = diophantine_split(p, q);
      if (d.u + d.w != p || d.v + d.z != q || d.u <= 0 || d.w <= 0 || d.u >= p || d.w >= p ||
          d.u * d.z - d.w * d.v != 1)
        ++bad;
    }
  return {bad == 0, counted(n, "coprime pairs", bad)};
}

Outcome cert_collapse(SplitMix64& rng, const SuiteLimits& L) {
  std::size_t bad = 0;
  for (int i = 0; i < L.collapse_samples; ++i) {
    Vec2 a, b;
    do {
      a = random_vec(rng, L.collapse_box);
      b = random_vec(rng, L.collapse_box);
    } while ((a + b).is_zero());
    const Vec2 y = random_vec(rng, L.collapse_box);
    if (!coefficient_collapse_check(a, b, y)) ++bad;
  }
  return {bad == 0, counted(L.collapse_samples, "random triples", bad)};
}

Outcome cert_json(SplitMix64& rng, const SuiteLimits&) {
  std::size_t bad = 0;
  for (int i = 0; i < 20; ++i) {
    const Vec2 x = random_vec(rng, 4), y = random_vec(rng, 4);
    const Json j = to_json(build_certificate(x, y));
    const Certificate back = certificate_from_json(j);
    if (to_json(back) != j || !validate_certificate(back)) ++bad;
  }
  return {bad == 0, counted(20, "round trips", bad)};
}

// ---- annulus -------------------------------------------------------------

Outcome annulus_angled(SplitMix64&, const SuiteLimits& L) {
  std::size_t bad = 0;
  for (int n = 1; n <= L.n_max; ++n)
    if (!angled_on_empty_check(n)) ++bad;
  return {bad == 0, "n=1.." + std::to_string(L.n_max) + (bad ? ", " + std::to_string(bad) + " failed" : "")};
}

Outcome annulus_projection(SplitMix64&, const SuiteLimits& L) {
  std::size_t bad = 0;
  for (int n = 1; n <= L.n_max; ++n)
    if (project_empty({0, n}) != hook_expansion(n)) ++bad;
  return {bad == 0, "n=1.." + std::to_string(L.n_max) + (bad ? ", " + std::to_string(bad) + " failed" : "")};
}

Outcome annulus_eigenvalues(SplitMix64&, const SuiteLimits& L) {
  std::size_t n = 0, bad = 0;
  for (int size = 1; size <= L.hook_max; ++size)
    for (int leg = 0; leg < size; ++leg) {
      const Hook h{size - 1 - leg, leg};
      ++n;
      if (meridian_eigenvalue(Partition::hook(h)) != hook_eigenvalue_closed_form(h)) ++bad;
    }
  return {bad == 0, counted(n, "hooks", bad)};
}

Outcome annulus_ck(SplitMix64&, const SuiteLimits& L) {
  std::size_t bad = 0;
  for (int k = 1; k <= 2 * L.n_max; ++k) {
    const RatFunc expected = k % 2 == 0 ? RatFunc(-1) : RatFunc(0);
    if (c_constant(k) != expected || hook_expansion(k).unit_coeff() != expected) ++bad;
  }
  return {bad == 0, "k=1.." + std::to_string(2 * L.n_max)};
}

// ---- bmw2 ----------------------------------------------------------------

Outcome bmw2_f2(SplitMix64&, const SuiteLimits&) { return {f2_checks(), "idempotent, absorbs sigma and h"}; }

Outcome bmw2_b2(SplitMix64&, const SuiteLimits&) {
  const BMW2Element b2 = section_s2(project_hecke(p2_element()));
  const BMW2Element diff = b2 - (RatFunc(2) * f2_closed_form() - BMW2Element::unit());
  const bool pure_h = diff.one.is_zero() && diff.sigma.is_zero() && !diff.h.is_zero();
  return {b2 == b2_closed_form() && pure_h && diff.h == delta().inverse(),
          "B2 - (2 f2 - 1) = " + diff.to_string()};
}

Outcome bmw2_relations(SplitMix64&, const SuiteLimits&) {
  const BMW2Element one = BMW2Element::unit(), sg = BMW2Element::sigma_gen(), h = BMW2Element::h_gen();
  const RatFunc z = qint(1), v = RatFunc::v(1);
  bool ok = sg * sg == one + z * (sg - v * h);
  ok = ok && sg * sigma_inverse() == one && sigma_inverse() * sg == one;
  ok = ok && bmw2_inverse(sg) == sigma_inverse();
  ok = ok && sg - sigma_inverse() == z * (one - h);
  ok = ok && h * h == delta() * h && sg * h == v * h && h * sg == v * h;
  const BMW2Element basis[] = {one, sg, h};
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& c : basis) ok = ok && (a * b) * c == a * (b * c);
  return {ok, "quadratic relation, inverse, associativity on the basis"};
}

Outcome bmw2_p1(SplitMix64&, const SuiteLimits&) {
  const BMW2Element p = p1_plus();
  const BMW2Element h = BMW2Element::h_gen();
  return {p * p == p && p * h == BMW2Element{} && h * p == BMW2Element{}, "p1+ idempotent, kills h"};
}

Outcome bmw2_beta(SplitMix64&, const SuiteLimits&) {
  // f2 has the form (1 + s sigma + beta_1 h)/(s^2 + 1); h f2 = 0 pins beta_1.
  const RatFunc s = RatFunc::s(1), v = RatFunc::v(1);
  const RatFunc forced = -(RatFunc(1) + s * v) / delta();
  return {forced == beta(1), "beta_1 = -(1 + s v)/delta"};
}

// ---- bracket -------------------------------------------------------------

Outcome bracket_phi_generators(SplitMix64&, const SuiteLimits& L) {
  std::size_t n = 0, bad = 0;
  for (const auto& x : classes_in_box(L.bracket_box)) {
    ++n;
    if (phi_map(generator(x)) != BracketElement::generator(x)) ++bad;
  }
  return {bad == 0, counted(n, "generators", bad)};
}

Outcome bracket_phi_hom(SplitMix64& rng, const SuiteLimits& L) {
  std::size_t bad = 0;
  for (int i = 0; i < L.phi_samples; ++i) {
    const SkeinElement p = random_skein(rng, 2, 2, 2), q = random_skein(rng, 2, 2, 2);
    if (phi_map(multiply(p, q)) != e_mul(phi_map(p), phi_map(q))) ++bad;
  }
  return {bad == 0, counted(L.phi_samples, "random pairs", bad)};
}

Outcome bracket_commutators(SplitMix64&, const SuiteLimits& L) {
  const auto cls = classes_in_box(L.bracket_box);
  std::size_t n = 0, bad = 0;
  for (const auto& x : cls)
    for (const auto& y : cls) {
      ++n;
      const BracketElement ex = BracketElement::generator(x), ey = BracketElement::generator(y);
      if (e_commutator(ex, ey) != e_relation_rhs(x, y)) ++bad;
      if (phi_map(bracket_of(x, y)) != e_relation_rhs(x, y)) ++bad;
    }
  return {bad == 0, counted(n, "ordered pairs", bad)};
}

Outcome bracket_assoc(SplitMix64& rng, const SuiteLimits& L) {
  std::size_t bad = 0;
  auto pick = [&] {
    if (rng.uniform(0, 5) == 0) return BracketElement::unit();
    return BracketElement::generator(random_class(rng, L.bracket_box));
  };
  for (int i = 0; i < L.bracket_assoc_samples; ++i) {
    const BracketElement a = pick(), b = pick(), c = pick();
    if (e_mul(e_mul(a, b), c) != e_mul(a, e_mul(b, c))) ++bad;
  }
  return {bad == 0, counted(L.bracket_assoc_samples, "random triples", bad)};
}

ChebPoly cheb_mul(const ChebPoly& a, const ChebPoly& b) {
  ChebPoly out{std::vector<Integer>(a.coeffs.size() + b.coeffs.size() - 1, Integer(0))};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return out;
}

ChebPoly cheb_add(ChebPoly a, const ChebPoly& b) {
  if (a.coeffs.size() < b.coeffs.size()) a.coeffs.resize(b.coeffs.size(), Integer(0));
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) a.coeffs[i] += b.coeffs[i];
  while (a.coeffs.size() > 1 && a.coeffs.back() == 0) a.coeffs.pop_back();
  return a;
}

Outcome bracket_parallel(SplitMix64&, const SuiteLimits& L) {
  std::size_t bad = 0;
  const Vec2 dirs[] = {{1, 0}, {0, 1}, {1, 1}, {2, -1}, {1, 3}};
  for (const Vec2& x0 : dirs)
    for (int m = 0; m <= 5; ++m)
      for (int n = 0; n <= 5; ++n) {
        const BracketElement lhs = e_mul(BracketElement::e(x0 * m), BracketElement::e(x0 * n));
        const BracketElement rhs = BracketElement::e(x0 * (m + n)) + BracketElement::e(x0 * std::abs(m - n));
        if (lhs != rhs) ++bad;
      }
  for (int m = 0; m <= L.cheb_n; ++m)
    for (int n = 0; n <= L.cheb_n; ++n)
      if (cheb_mul(cheb(m, ChebKind::T), cheb(n, ChebKind::T)) !=
          cheb_add(cheb(m + n, ChebKind::T), cheb(std::abs(m - n), ChebKind::T)))
        ++bad;
  return {bad == 0, "e_{mx}e_{nx} and T_m T_n product laws"};
}

Outcome bracket_cheb(SplitMix64&, const SuiteLimits& L) {
  std::size_t bad = 0;
  for (int n = 0; n <= L.cheb_n; ++n)
    if (!cheb_functional_equation(n, ChebKind::T) || !cheb_functional_equation(n, ChebKind::S)) ++bad;
  return {bad == 0, "T_n, S_n for n=0.." + std::to_string(L.cheb_n)};
}

Outcome bracket_log(SplitMix64&, const SuiteLimits& L) {
  return {cheb_log_identity_check(L.log_n), "through t^" + std::to_string(L.log_n)};
}

Outcome bracket_delta(SplitMix64&, const SuiteLimits&) {
  const RatFunc d = specialize_bracket(delta());
  return {d == -RatFunc::s(2) - RatFunc::s(-2), "specialized delta = " + d.to_string()};
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"field", "ring_identities", field_ring_identities},
      {"field", "axioms", field_axioms},
      {"field", "bar_involution", field_bar},
      {"field", "constants", field_constants},
      {"field", "random_point_oracle", field_random_oracle},
      {"torus", "presentation", torus_presentation},
      {"torus", "associativity", torus_associativity},
      {"torus", "strategy_independence", torus_strategy},
      {"torus", "jacobi", torus_jacobi},
      {"torus", "lie_closure", torus_lie_closure},
      {"torus", "gl2_equivariance", torus_gl2},
      {"certificates", "representatives", cert_representatives},
      {"certificates", "coordinate_box", cert_box},
      {"certificates", "diophantine", cert_diophantine},
      {"certificates", "coefficient_collapse", cert_collapse},
      {"certificates", "json_round_trip", cert_json},
      {"annulus", "angled_on_empty", annulus_angled},
      {"annulus", "projection_axis", annulus_projection},
      {"annulus", "hook_eigenvalues", annulus_eigenvalues},
      {"annulus", "ck_parity", annulus_ck},
      {"bmw2", "f2", bmw2_f2},
      {"bmw2", "b2", bmw2_b2},
      {"bmw2", "relations", bmw2_relations},
      {"bmw2", "p1_plus", bmw2_p1},
      {"bmw2", "beta1", bmw2_beta},
      {"bracket", "phi_generators", bracket_phi_generators},
      {"bracket", "phi_homomorphism", bracket_phi_hom},
      {"bracket", "commutators", bracket_commutators},
      {"bracket", "associativity", bracket_assoc},
      {"bracket", "parallel_curves", bracket_parallel},
      {"bracket", "chebyshev", bracket_cheb},
      {"bracket", "log_identity", bracket_log},
      {"bracket", "specialized_delta", bracket_delta},
  };
  return defs;
}

CheckResult execute(const CheckDef& def, std::uint64_t seed, const SuiteLimits& limits) {
  CheckResult r{def.suite, def.name, false, "", 0};
  const std::string qualified = def.suite + "." + def.name;
  SplitMix64 rng(seed ^ fnv1a(qualified));
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = def.fn(rng, limits);
    r.pass = o.pass;
    r.detail = std::move(o.detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string SuiteReport::to_text(bool timings) const {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& c : checks) {
    failed += !c.pass;
    out << (c.pass ? "PASS " : "FAIL ") << c.suite << "." << c.name << ": " << c.detail;
    if (timings) out << " [" << c.seconds << "s]";
    out << "\n";
  }
  out << checks.size() << " checks, " << failed << " failed\n";
  return out.str();
}

Json SuiteReport::to_json(bool timings) const {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json j = {{"suite", c.suite}, {"check", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    if (timings) j["seconds"] = c.seconds;
    arr.push_back(j);
  }
  return {{"pass", ok()}, {"checks", arr}};
}

std::vector<std::string> suite_names() { return {"field", "torus", "certificates", "annulus", "bmw2", "bracket", "all"}; }

std::vector<std::string> check_names(const std::string& suite) {
  std::vector<std::string> out;
  for (const auto& d : registry())
    if (suite == "all" || d.suite == suite) out.push_back(d.suite + "." + d.name);
  return out;
}

CheckResult run_check(const std::string& name, std::uint64_t seed, const SuiteLimits& limits) {
  for (const auto& d : registry())
    if (d.suite + "." + d.name == name) return execute(d, seed, limits);
  throw DomainError("unknown check '" + name + "'");
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, const SuiteLimits& limits) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw DomainError("unknown suite '" + suite + "'");
  SuiteReport report;
  for (const auto& d : registry())
    if (suite == "all" || d.suite == suite) report.checks.push_back(execute(d, seed, limits));
  return report;
}

}  // namespace skein
