#include "poly_gcd.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "skein/error.hpp"

namespace skein::detail {
namespace {

bool is_zero(const UPoly& a) { return a.empty(); }
bool is_zero(const BPoly& a) { return a.empty(); }
int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }
int deg(const BPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly scale(UPoly a, const mpz_class& c) {
  for (auto& x : a) x *= c;
  trim(a);
  return a;
}

// a -= t * x^k * b
void sub_shifted(UPoly& a, const mpz_class& t, int k, const UPoly& b) {
  if (a.size() < b.size() + k) a.resize(b.size() + k);
  for (std::size_t j = 0; j < b.size(); ++j) a[j + k] -= t * b[j];
  trim(a);
}

void sub_shifted(BPoly& a, const UPoly& t, int k, const BPoly& b) {
  if (a.size() < b.size() + k) a.resize(b.size() + k);
  for (std::size_t j = 0; j < b.size(); ++j) {
    UPoly prod = mul(t, b[j]);
    UPoly& dst = a[j + k];
    if (dst.size() < prod.size()) dst.resize(prod.size());
    for (std::size_t i = 0; i < prod.size(); ++i) dst[i] -= prod[i];
    trim(dst);
  }
  trim(a);
}

UPoly prem(UPoly r, const UPoly& b) {
  const int n = deg(b);
  const mpz_class lc = b.back();
  while (!is_zero(r) && deg(r) >= n) {
    const mpz_class lead = r.back();
    const int k = deg(r) - n;
    r = scale(std::move(r), lc);
    sub_shifted(r, lead, k, b);
  }
  return r;
}

BPoly scale(BPoly a, const UPoly& c) {
  for (auto& x : a) x = mul(x, c);
  trim(a);
  return a;
}

BPoly prem(BPoly r, const BPoly& b) {
  const int n = deg(b);
  const UPoly lc = b.back();
  while (!is_zero(r) && deg(r) >= n) {
    const UPoly lead = r.back();
    const int k = deg(r) - n;
    r = scale(std::move(r), lc);
    sub_shifted(r, lead, k, b);
  }
  return r;
}

UPoly sign_normalized(UPoly a) {
  if (!a.empty() && a.back() < 0)
    for (auto& x : a) x = -x;
  return a;
}

BPoly primitive(const BPoly& a) {
  if (a.empty()) return a;
  const UPoly c = content(a);
  BPoly r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x.empty() ? UPoly{} : divexact(x, c));
  if (r.back().back() < 0)
    for (auto& x : r)
      for (auto& y : x) y = -y;
  return r;
}

// ---- modular coprimality test --------------------------------------------
//
// Let G = gcd(A, B).  If deg_s G > 0 then lc_s(G) divides lc_s(A), so when
// lc_s(A) does not vanish at v = v0 mod p, G(s, v0) mod p is a common factor
// of positive degree of A(s, v0) and B(s, v0).  Hence a trivial gcd of the
// images proves deg_s G = 0; the same argument with s = s0 bounds deg_v G.
// Both together leave only an integer gcd.  The test never gives a false
// "coprime".

constexpr std::uint64_t kPrime = 4294967291ULL;  // largest prime below 2^32

using ModPoly = std::vector<std::uint64_t>;

std::uint64_t mod(const mpz_class& x) { return mpz_fdiv_ui(x.get_mpz_t(), kPrime); }

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kPrime;
  while (e) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mod_gcd_degree(ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = pow_mod(b.back(), kPrime - 2);
    while (a.size() >= b.size()) {
      const std::uint64_t t = a.back() * inv % kPrime;
      const std::size_t k = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[j + k] = (a[j + k] + kPrime - t * b[j] % kPrime) % kPrime;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

int s_degree(const BPoly& a) {
  int d = -1;
  for (const auto& x : a) d = std::max(d, deg(x));
  return d;
}

// A(s, v0) mod p, or empty when the s-degree drops.
ModPoly image_in_s(const BPoly& a, std::uint64_t v0) {
  const int ds = s_degree(a);
  ModPoly out(static_cast<std::size_t>(ds + 1), 0);
  std::uint64_t vp = 1;
  for (const auto& x : a) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (out[i] + mod(x[i]) * vp) % kPrime;
    vp = vp * v0 % kPrime;
  }
  if (out.back() == 0) return {};
  return out;
}

// A(s0, v) mod p, or empty when the v-degree drops.
ModPoly image_in_v(const BPoly& a, std::uint64_t s0) {
  ModPoly out;
  for (const auto& x : a) {
    std::uint64_t acc = 0;
    for (std::size_t i = x.size(); i-- > 0;) acc = (acc * s0 + mod(x[i])) % kPrime;
    out.push_back(acc);
  }
  if (out.empty() || out.back() == 0) return {};
  return out;
}

bool certainly_coprime(const BPoly& a, const BPoly& b) {
  static constexpr std::uint64_t points[] = {3, 7, 12345, 987654, 31337};
  bool s_done = s_degree(a) == 0 || s_degree(b) == 0;
  bool v_done = deg(a) == 0 || deg(b) == 0;
  for (std::uint64_t pt : points) {
    if (!s_done) {
      const ModPoly ia = image_in_s(a, pt), ib = image_in_s(b, pt);
      if (!ia.empty() && !ib.empty()) {
        if (mod_gcd_degree(ia, ib) != 0) return false;
        s_done = true;
      }
    }
    if (!v_done) {
      const ModPoly ia = image_in_v(a, pt), ib = image_in_v(b, pt);
      if (!ia.empty() && !ib.empty()) {
        if (mod_gcd_degree(ia, ib) != 0) return false;
        v_done = true;
      }
    }
    if (s_done && v_done) return true;
  }
  return false;
}

mpz_class integer_content(const BPoly& a) {
  mpz_class g = 0;
  for (const auto& x : a) {
    mpz_class c = content(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

}  // namespace

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(BPoly& a) {
  for (auto& x : a) trim(x);
  while (!a.empty() && a.back().empty()) a.pop_back();
}

mpz_class content(const UPoly& a) {
  mpz_class g = 0;
  for (const auto& x : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly primitive(const UPoly& a) {
  if (a.empty()) return a;
  mpz_class c = content(a);
  if (a.back() < 0) c = -c;
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
  return r;
}

UPoly gcd(const UPoly& a0, const UPoly& b0) {
  if (is_zero(a0)) return sign_normalized(b0);
  if (is_zero(b0)) return sign_normalized(a0);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), content(a0).get_mpz_t(), content(b0).get_mpz_t());
  UPoly a = primitive(a0);
  UPoly b = primitive(b0);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!is_zero(b)) {
    UPoly r = prem(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  return scale(std::move(a), c);
}

UPoly divexact(const UPoly& a, const UPoly& b) {
  if (is_zero(b)) throw InternalError("divexact: division by zero polynomial");
  if (is_zero(a)) return {};
  if (deg(a) < deg(b)) throw InternalError("divexact: inexact univariate division");
  UPoly q(deg(a) - deg(b) + 1);
  UPoly r = a;
  const mpz_class& lc = b.back();
  while (!is_zero(r) && deg(r) >= deg(b)) {
    const int k = deg(r) - deg(b);
    if (!mpz_divisible_p(r.back().get_mpz_t(), lc.get_mpz_t()))
      throw InternalError("divexact: inexact univariate division");
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), r.back().get_mpz_t(), lc.get_mpz_t());
    q[k] = t;
    sub_shifted(r, t, k, b);
  }
  if (!is_zero(r)) throw InternalError("divexact: inexact univariate division");
  trim(q);
  return q;
}

UPoly content(const BPoly& a) {
  UPoly g;
  for (const auto& x : a) {
    g = gcd(g, x);
    if (g.size() == 1 && g[0] == 1) break;
  }
  return g;
}

BPoly gcd(const BPoly& a0, const BPoly& b0) {
  if (is_zero(a0)) return is_zero(b0) ? b0 : scale(primitive(b0), content(b0));
  if (is_zero(b0)) return scale(primitive(a0), content(a0));
  if (certainly_coprime(a0, b0)) {
    mpz_class g = integer_content(a0);
    const mpz_class h = integer_content(b0);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
    return BPoly{UPoly{g}};
  }
  const UPoly c = gcd(content(a0), content(b0));
  BPoly a = primitive(a0);
  BPoly b = primitive(b0);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!is_zero(b)) {
    BPoly r = prem(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  return scale(std::move(a), c);
}

BPoly divexact(const BPoly& a, const BPoly& b) {
  if (is_zero(b)) throw InternalError("divexact: division by zero polynomial");
  if (is_zero(a)) return {};
  if (deg(a) < deg(b)) throw InternalError("divexact: inexact bivariate division");
  BPoly q(deg(a) - deg(b) + 1);
  BPoly r = a;
  while (!is_zero(r) && deg(r) >= deg(b)) {
    const int k = deg(r) - deg(b);
    UPoly t = divexact(r.back(), b.back());
    q[k] = t;
    sub_shifted(r, t, k, b);
  }
  if (!is_zero(r)) throw InternalError("divexact: inexact bivariate division");
  trim(q);
  return q;
}

}  // namespace skein::detail
