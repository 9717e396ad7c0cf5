#include "surf4/bounds.hpp"

#include <stdexcept>

#include "surf4/checked_int.hpp"

namespace surf4 {

BoundVerdict castelnuovo_p3(int64_t d, int64_t pi) {
  if (d < 3) throw std::domain_error("castelnuovo_p3: requires d >= 3");
  Int lhs = 4 * Int(pi);
  Int rhs = (Int(d) - 2) * (Int(d) - 2);
  return {"castelnuovo_p3", lhs <= rhs, {lhs.value(), rhs.value()}};
}

int64_t max_genus_rho(int64_t d) { return ((4 - d % 4) % 4 + 4) % 4; }

int64_t max_genus_g(int64_t d) {
  if (d <= 12)
    throw std::domain_error("max_genus_g: defined only for d > 12");
  Int rho = max_genus_rho(d);
  Int num = Int(d) * Int(d) - 3 * rho * (4 - rho);
  // num = 4(4k^2 - 2k*rho + rho^2 - 3*rho) with d = 4k - rho, and
  // rho*(rho-3) is even, so the division by 8 is exact.
  return (exact_div(num, 8) + 1).value();
}

BoundVerdict strict_eighth_bound(int64_t d, int64_t pi) {
  Int lhs = 8 * (Int(pi) - 1);
  Int rhs = Int(d) * Int(d);
  return {"strict_eighth_bound", lhs < rhs, {lhs.value(), rhs.value()}};
}

BoundVerdict acm_exclusion(int64_t d, int64_t pi) {
  int64_t g = max_genus_g(d);  // domain error for d <= 12
  return {"acm_exclusion", pi == g, {pi, g}};
}

}  // namespace surf4
