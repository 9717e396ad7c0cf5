#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace surf4 {

/// One (n, b, r) realization of a candidate: b solves the double point
/// constraint at that n, and r = -a^2 n + 2ab - d.
struct BSolution {
  int64_t n;
  int64_t b;
  int64_t r;

  friend bool operator==(const BSolution&, const BSolution&) = default;
};

enum class FnVerdict { survives, excluded };

const char* to_string(FnVerdict v);

/// A candidate pair (a, d) for a simple-base-point system on F_n,
/// together with everything the enumeration knows about it. pi and the
/// blow-up count r are independent of n once b solves the constraint,
/// so a single pi is attached to the pair.
struct FnCandidate {
  int64_t a;
  int64_t d;
  int64_t f_value;       // bound_poly(a, d)
  bool divisibility_ok;  // (6a-10) | (a-1)(d^2 - 7d + 10a - 4)
  std::vector<BSolution> b_solutions;  // within the reporting n-window
  std::optional<int64_t> pi;
  FnVerdict verdict;
  std::vector<std::string> reasons;
};

/// Integer polynomial d^2(a+1) - 28(a-1)d + 16a^2 - 16a + 16. For a
/// simple-base-point system with degree d and ruling degree a >= 2 that
/// satisfies the double point formula, its sign equals the sign of
/// 8(pi - 1) - d^2; n drops out entirely.
int64_t fn_bound_poly(int64_t a, int64_t d);

/// All integers d with fn_bound_poly(a, d) <= 0 (or < 0 when strict).
/// Requires a >= 2 so the parabola opens upward.
std::vector<int64_t> fn_bound_range(int64_t a, bool strict = false);

/// True iff for every a in 10..a_max the minimum of fn_bound_poly(a, .)
/// over the integers is strictly positive. The parabola's vertex sits at
/// d = 14(a-1)/(a+1), so the integer minimum is at floor or ceil of it.
/// Requires a_max >= 10.
bool fn_high_ruling_positive(int64_t a_max);

/// Divisibility filter (6a-10) | (a-1)(d^2 - 7d + 10a - 4): necessary
/// for (a-1)b to be an integer for any n. Requires a >= 2.
bool fn_divisibility(int64_t a, int64_t d);

/// The candidate pairs with ruling degree a in 5..9: fn_bound_poly <= 0
/// (or < 0 when strict) plus the divisibility filter, sorted by (a, d).
std::vector<std::pair<int64_t, int64_t>> fn_candidate_pairs(bool strict = false);

/// b = (d^2 - 7d + 3a^2 n - 5an + 10a - 4) / (6a - 10) when the division
/// is exact, absent otherwise. When present, (a, b, n, r) with
/// r = -a^2 n + 2ab - d has double point residual zero. Requires a >= 2.
std::optional<int64_t> solve_b(int64_t a, int64_t d, int64_t n);

/// Full analysis of the single candidate with d > 12, (a, d) = (7, 13):
/// b exists exactly for odd n with 2b = 7n + 9, every solution has
/// r = 50 and pi = 21, and pi meets max_genus_g(13) = 21, which excludes
/// the candidate through the aCM degree bound.
struct Degree13Analysis {
  FnCandidate candidate;                     // the (7, 13) row
  std::vector<int64_t> two_b_minus_seven_n;  // distinct 2b - 7n over solutions
  std::vector<int64_t> r_values;             // distinct r over solutions
  std::vector<int64_t> pi_values;            // distinct pi over solutions
  bool solutions_exactly_odd_n;              // over the checked n range
  int64_t g13;                               // max_genus_g(13)
};

Degree13Analysis degree13_analysis(int64_t n_lo = 0, int64_t n_hi = 20);

/// The whole enumeration: candidate pairs, per-pair solutions in the
/// n-window, the d > 12 exclusion, and the a <= 4 delegation to the
/// ruled-surface tables.
struct FnClassification {
  bool strict;
  int64_t n_lo, n_hi;
  std::vector<FnCandidate> candidates;  // sorted by (a, d)
  Degree13Analysis degree13;

  // summary
  int64_t max_degree;  // max over surviving candidates and the delegated branch
  int64_t max_surviving_candidate_degree;
  int64_t delegated_max_degree;  // max degree over classify_ruled(1..4)
  std::vector<std::pair<int64_t, int64_t>> surviving_d_gt_12;  // expect empty
  std::vector<std::string> notes;
};

FnClassification classify_fn_systems(int64_t n_lo = 0, int64_t n_hi = 20,
                                     bool strict = false);

}  // namespace surf4
