#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace surf4 {

/// Outcome of a genus-bound predicate. witness holds the two exact
/// integers that were compared, so the verdict can be recomputed from
/// the record alone.
struct BoundVerdict {
  std::string name;
  bool holds;
  std::vector<int64_t> witness;

  friend bool operator==(const BoundVerdict&, const BoundVerdict&) = default;
};

/// Castelnuovo's inequality for nondegenerate curves of degree d in P^3,
/// in cross-multiplied form: holds iff 4*pi <= (d-2)^2. Requires d >= 3.
BoundVerdict castelnuovo_p3(int64_t d, int64_t pi);

/// Residue class 0 <= rho < 4 with d + rho = 0 (mod 4).
int64_t max_genus_rho(int64_t d);

/// Largest genus of a smooth degree-d curve in P^3 not lying on a cubic
/// surface: 1 + (d^2 - 3*rho*(4-rho))/8 with d + rho = 0 (mod 4).
/// Defined here only for d > 12 (domain error below); the division is
/// always exact in that range.
int64_t max_genus_g(int64_t d);

/// Strict bound pi < 1 + d^2/8 in integer form: holds iff 8*(pi-1) < d^2.
BoundVerdict strict_eighth_bound(int64_t d, int64_t pi);

/// A surface in P^4 of non-general type with d > 12 and pi = G(d,4) would
/// have an arithmetically Cohen-Macaulay hyperplane section, impossible
/// since aCM forces d <= 8. holds = candidate excluded, iff pi equals
/// max_genus_g(d). Requires d > 12.
BoundVerdict acm_exclusion(int64_t d, int64_t pi);

}  // namespace surf4
