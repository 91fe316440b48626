#include "skein/detail/render.hpp"

namespace skein::detail {

std::string render_term(const std::string& basis, const RatFunc& c, bool first) {
  const bool simple = c.is_polynomial() && c.num().is_monomial();
  const bool negative = simple && c.num().leading().second < 0;
  const RatFunc mag = negative ? -c : c;
  std::string sign = first ? (negative ? "-" : "") : (negative ? " - " : " + ");
  std::string coeff;
  if (basis.empty()) {
    coeff = mag.to_string();
    if (!simple && !first) coeff = "(" + coeff + ")";
    return sign + coeff;
  }
  if (mag.is_one()) return sign + basis;
  coeff = mag.to_string();
  if (!simple) coeff = "(" + coeff + ")";
  return sign + coeff + "*" + basis;
}

}  // namespace skein::detail
