#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace surf4 {

/// Which argument produced a classification row.
enum class RuledBranch {
  degenerate_fiber,          // general fiber spans only a hyperplane
  external_classification,   // scrolls / conic bundles, quoted results
  nondegenerate_fiber_bound  // nonspecial bound d <= 9, no genus attached
};

enum class RuledVerdict { admissible, excluded };

const char* to_string(RuledBranch b);
const char* to_string(RuledVerdict v);

/// One row of a classification table for a-ruled surfaces. pi is absent
/// only on nondegenerate_fiber_bound rows, where no genus formula applies.
/// "admissible" is a purely numerical verdict; it never asserts that a
/// surface realizing the row exists.
struct CandidateRecord {
  int64_t a;
  int64_t d;
  std::optional<int64_t> pi;
  RuledVerdict verdict;
  RuledBranch branch;
  std::vector<std::string> reasons;
};

/// Non-degenerate quartic fibers force a nonspecial surface, and
/// nonspecial rational surfaces in P^4 have d <= 9.
inline constexpr int64_t NONDEGENERATE_FIBER_MAX_DEGREE = 9;

/// Sectional genus of an a-ruled surface (a >= 3) whose general fiber is
/// degenerate: the hyperplane section splits as a plane curve of degree
/// d-a plus a rational fiber meeting it in a points, so
///   pi = (d-a-1)(d-a-2)/2 + a - 1.
int64_t degenerate_ruling_genus(int64_t d, int64_t a);

/// All integers d with d^2 - 2d(2a+1) + 2a^2 + 10a - 4 <= 0, i.e. the
/// degrees where the genus above passes Castelnuovo's inequality in P^3.
/// Decided by evaluating the integer quadratic, never by square roots.
std::vector<int64_t> castelnuovo_degree_range(int64_t a);

/// All integers d with 3d^2 - 2d(4a+6) + 4a^2 + 20a - 8 < 0 (strict):
/// the degrees where the genus above stays below 1 + d^2/8. Meaningful
/// for d > 12 contexts.
std::vector<int64_t> eighth_bound_degree_range(int64_t a);

/// Classification rows for a-ruled rational surfaces in P^4:
///   a = 1: the cubic scroll (d = 3, pi = 0);
///   a = 2: Del Pezzo (d = 4, pi = 1) and Castelnuovo (d = 5, pi = 2);
///   a = 3: degenerate-fiber rows d = 5..9 with the genus formula;
///   a = 4: degenerate-fiber rows d = 6..12 plus the nonspecial-bound row;
///   a >= 5: degenerate-fiber rows, each annotated with castelnuovo_p3.
/// Throws std::domain_error for a < 1.
std::vector<CandidateRecord> classify_ruled(int64_t a);

}  // namespace surf4
