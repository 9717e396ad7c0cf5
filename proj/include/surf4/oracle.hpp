#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace surf4 {

/// Raw enumeration box. Empty intervals (lo > hi) enumerate nothing.
struct SearchBox {
  int64_t a_lo, a_hi;
  int64_t b_lo, b_hi;
  int64_t n_lo, n_hi;
  int64_t r_lo, r_hi;
  int64_t d_min;

  friend bool operator==(const SearchBox&, const SearchBox&) = default;
};

/// Box used by the verification suite: completes in well under a second
/// and is wide enough that no candidate solution is clipped.
SearchBox default_box();

struct OracleTuple {
  int64_t a, b, n, r, d, pi;

  friend bool operator==(const OracleTuple&, const OracleTuple&) = default;
};

/// Brute force over the box, filtering by the exact relations only:
/// d = -a^2 n + 2ab - r >= d_min, double point residual zero, and the
/// strict bound 8(pi-1) < d^2. No use of the solved form of b or the
/// divisibility shortcut, so agreement with the classifier is a genuine
/// cross-check. Output sorted by (a, d, n, b, r).
std::vector<OracleTuple> oracle_enumerate(const SearchBox& box);

struct CrossValidation {
  bool pass;
  std::vector<std::string> warnings;  // clipping / boundary hits
  std::vector<OracleTuple> extra;     // oracle-only tuples
  std::vector<OracleTuple> missing;   // classifier-expected tuples absent
  std::vector<std::pair<int64_t, int64_t>> d_gt_12_pairs;  // distinct (a, d)
};

/// Compares the oracle against the classifier route on the boxed region:
/// every oracle tuple with a in 5..9 must match a candidate pair with
/// b = solve_b(a, d, n), and every in-box candidate solution must be
/// found by the oracle. Candidate solutions falling outside the box
/// raise a clipping warning instead of a failure, as do emitted tuples
/// sitting on the box boundary.
CrossValidation cross_validate(const SearchBox& box);

}  // namespace surf4
