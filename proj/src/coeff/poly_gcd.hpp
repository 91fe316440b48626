#pragma once

// Dense integer polynomials used for RatFunc canonicalization.
//
// UPoly is Z[s] (index = degree), BPoly is Z[s][v] (index = v-degree, entries
// in Z[s]).  GCDs use the primitive pseudo-remainder sequence; sizes here are
// tiny, so the coefficient growth is irrelevant.

#include <vector>

#include <gmpxx.h>

namespace skein::detail {

using UPoly = std::vector<mpz_class>;
using BPoly = std::vector<UPoly>;

void trim(UPoly& a);
void trim(BPoly& a);

mpz_class content(const UPoly& a);
/// a / content(a), with positive leading coefficient; zero stays zero.
UPoly primitive(const UPoly& a);
UPoly gcd(const UPoly& a, const UPoly& b);
/// Exact quotient; throws InternalError if b does not divide a.
UPoly divexact(const UPoly& a, const UPoly& b);

UPoly content(const BPoly& a);
BPoly gcd(const BPoly& a, const BPoly& b);
BPoly divexact(const BPoly& a, const BPoly& b);

}  // namespace skein::detail
