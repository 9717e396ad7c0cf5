#include "surf4/invariants.hpp"

#include "surf4/checked_int.hpp"
#include "surf4/errors.hpp"

namespace surf4 {

namespace {

// (x/2) for even x; ParityError otherwise.
Int half(Int x) {
  if (!is_even(x)) throw ParityError("adjunction produced an odd D.(D+K)");
  return exact_div(x, 2);
}

}  // namespace

int64_t degree(int64_t a, int64_t b, int64_t n, int64_t r) {
  Int A = a, B = b, N = n, R = r;
  return (-(A * A * N) + 2 * A * B - R).value();
}

int64_t sectional_genus(int64_t a, int64_t b, int64_t n) {
  Int A = a, B = b, N = n;
  Int twice = -(A * A * N) + A * N - 2 * A + 2 * A * B - 2 * B;
  return (half(twice) + 1).value();
}

int64_t adjunction_genus(const DivisorClass& d, const SurfaceModel& s) {
  DivisorClass k = canonical_class(s);
  Int self = intersect(d, d, s);
  Int with_k = intersect(d, k, s);
  return (half(self + with_k) + 1).value();
}

int64_t double_point_residual(int64_t a, int64_t b, int64_t n, int64_t r) {
  Int d = degree(a, b, n, r);
  Int pi = sectional_genus(a, b, n);
  return (d * (d - 5) - 10 * (pi - 1) - (4 - 2 * Int(r))).value();
}

NumericalInvariants compute_invariants(int64_t a, int64_t b, int64_t n,
                                       int64_t r) {
  Int d = degree(a, b, n, r);
  Int pi = sectional_genus(a, b, n);
  Int k2 = 8 - Int(r);
  // Relation form of the residual; equals double_point_residual since
  // 12*chi - 2*k_squared = 2r - 4 at chi = 1, k_squared = 8 - r.
  Int dp = d * (d - 5) - 10 * (pi - 1) + 12 * Int(RATIONAL_SURFACE_CHI) - 2 * k2;
  return {d.value(), pi.value(), k2.value(), RATIONAL_SURFACE_CHI, dp.value()};
}

}  // namespace surf4
