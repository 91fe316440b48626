#pragma once

#include <string>

#include "skein/coeff.hpp"

namespace skein::detail {

/// One summand "coeff*basis" of a rendered element; the sign is folded into
/// the joiner so that the output reads "a - b" rather than "a + -b".  An
/// empty basis renders the scalar alone.
std::string render_term(const std::string& basis, const RatFunc& c, bool first);

}  // namespace skein::detail
