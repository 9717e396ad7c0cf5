#pragma once

#include <cstdint>

#include "surf4/picard.hpp"

namespace surf4 {

/// chi(O_S) = 1 for every rational surface. The double point relation
/// d(d-5) - 10(pi-1) + 12*chi = 2K^2 is evaluated with this value.
inline constexpr int64_t RATIONAL_SURFACE_CHI = 1;

/// Numerical invariants of an embedded class aC_0 + bf - E_1 - ... - E_r.
/// dp_residual is d(d-5) - 10(pi-1) + 12*chi - 2*k_squared; it vanishes
/// exactly when the class satisfies the double point formula for smooth
/// surfaces in P^4.
struct NumericalInvariants {
  int64_t d;
  int64_t pi;
  int64_t k_squared;
  int64_t chi;
  int64_t dp_residual;

  friend bool operator==(const NumericalInvariants&,
                         const NumericalInvariants&) = default;
};

/// d = -a^2 n + 2ab - r, the self-intersection of aC_0 + bf - Sum E_i.
int64_t degree(int64_t a, int64_t b, int64_t n, int64_t r);

/// Sectional genus of aC_0 + bf - Sum E_i:
///   2 pi - 2 = -a^2 n + an - 2a + 2ab - 2b.
/// The right-hand side is even for all integer inputs (an(a-1) is even,
/// every other term carries a factor 2); an odd value throws ParityError.
int64_t sectional_genus(int64_t a, int64_t b, int64_t n);

/// Arithmetic genus of an arbitrary class via adjunction,
/// 1 + (D.D + D.K)/2. Agrees with sectional_genus on hyperplane classes.
int64_t adjunction_genus(const DivisorClass& d, const SurfaceModel& s);

/// d(d-5) - 10(pi-1) - (4-2r); zero iff the double point formula holds.
int64_t double_point_residual(int64_t a, int64_t b, int64_t n, int64_t r);

/// All invariants of the class (d, pi, K^2 = 8 - r, chi = 1, dp residual).
NumericalInvariants compute_invariants(int64_t a, int64_t b, int64_t n,
                                       int64_t r);

}  // namespace surf4
