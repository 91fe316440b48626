#pragma once

// BMW_2 with basis {1, sigma, h}.  Structure constants:
//   sigma h = h sigma = v h,   h^2 = delta h,
//   sigma^2 = 1 + (s - s^-1)(sigma - v h),
// equivalently sigma - sigma^-1 = (s - s^-1)(1 - h).

#include <string>

#include "skein/coeff.hpp"

namespace skein {

struct BMW2Element {
  RatFunc one;
  RatFunc sigma;
  RatFunc h;

  static BMW2Element unit() { return {RatFunc(1), RatFunc(), RatFunc()}; }
  static BMW2Element sigma_gen() { return {RatFunc(), RatFunc(1), RatFunc()}; }
  static BMW2Element h_gen() { return {RatFunc(), RatFunc(), RatFunc(1)}; }

  BMW2Element& operator+=(const BMW2Element& o);
  BMW2Element& operator-=(const BMW2Element& o);
  BMW2Element& operator*=(const RatFunc& c);
  friend BMW2Element operator+(BMW2Element a, const BMW2Element& b) { return a += b; }
  friend BMW2Element operator-(BMW2Element a, const BMW2Element& b) { return a -= b; }
  friend BMW2Element operator*(const RatFunc& c, BMW2Element a) { return a *= c; }

  friend bool operator==(const BMW2Element&, const BMW2Element&) = default;

  std::string to_string() const;
};

BMW2Element bmw2_mul(const BMW2Element& x, const BMW2Element& y);
inline BMW2Element operator*(const BMW2Element& x, const BMW2Element& y) { return bmw2_mul(x, y); }

/// Two-sided inverse; throws DomainError when x is not invertible.
BMW2Element bmw2_inverse(const BMW2Element& x);

/// sigma^-1 = sigma - (s - s^-1)(1 - h).
BMW2Element sigma_inverse();

/// Projection to the Hecke quotient H_2 = BMW_2 / (h): drops the h part.
BMW2Element project_hecke(const BMW2Element& x);

/// p1+ = 1 - delta^-1 h.
BMW2Element p1_plus();

/// s_2(x) = p1+ x p1+ for x with zero h-coordinate.
BMW2Element section_s2(const BMW2Element& x);

/// P_2 = (sigma + sigma^-1)/(s + s^-1).
BMW2Element p2_element();
/// z_2 = (1 + s sigma)/(s^2 + 1), the Hecke symmetrizer lifted to {1, sigma}.
BMW2Element z2_element();
/// f_2 = (1 + s sigma + beta_1 h)/(s^2 + 1).
BMW2Element f2_closed_form();
/// P_2 - (v + v^-1)/(s + s^-1) delta^-1 h.
BMW2Element b2_closed_form();

/// f2^2 = f2, f2 sigma = sigma f2 = s f2, f2 h = h f2 = 0, and
/// s_2(z_2) = f2_closed_form().
bool f2_checks();

}  // namespace skein
