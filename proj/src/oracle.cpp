#include "surf4/oracle.hpp"

#include <algorithm>
#include <tuple>

#include "surf4/bounds.hpp"
#include "surf4/checked_int.hpp"
#include "surf4/fn_systems.hpp"
#include "surf4/invariants.hpp"

namespace surf4 {

SearchBox default_box() { return {3, 9, 0, 60, 0, 6, 0, 120, 13}; }

namespace {

auto key(const OracleTuple& t) {
  return std::make_tuple(t.a, t.d, t.n, t.b, t.r);
}

void canonical_sort(std::vector<OracleTuple>& v) {
  std::sort(v.begin(), v.end(),
            [](const OracleTuple& x, const OracleTuple& y) {
              return key(x) < key(y);
            });
}

std::string describe(const OracleTuple& t) {
  return "(a=" + std::to_string(t.a) + ", b=" + std::to_string(t.b) +
         ", n=" + std::to_string(t.n) + ", r=" + std::to_string(t.r) +
         ", d=" + std::to_string(t.d) + ", pi=" + std::to_string(t.pi) + ")";
}

}  // namespace

std::vector<OracleTuple> oracle_enumerate(const SearchBox& box) {
  std::vector<OracleTuple> out;
  for (int64_t a = box.a_lo; a <= box.a_hi; ++a) {
    for (int64_t b = box.b_lo; b <= box.b_hi; ++b) {
      for (int64_t n = box.n_lo; n <= box.n_hi; ++n) {
        // Computing pi asserts the parity of relation 2 for the triple.
        int64_t pi = sectional_genus(a, b, n);
        for (int64_t r = box.r_lo; r <= box.r_hi; ++r) {
          int64_t d = degree(a, b, n, r);
          if (d < box.d_min) break;  // d strictly decreases with r
          if (double_point_residual(a, b, n, r) != 0) continue;
          if (!strict_eighth_bound(d, pi).holds) continue;
          out.push_back({a, b, n, r, d, pi});
        }
      }
    }
  }
  canonical_sort(out);
  return out;
}

CrossValidation cross_validate(const SearchBox& box) {
  CrossValidation cv{true, {}, {}, {}, {}};
  std::vector<OracleTuple> oracle = oracle_enumerate(box);

  for (const OracleTuple& t : oracle) {
    if (t.d > 12) {
      auto pair = std::make_pair(t.a, t.d);
      if (std::find(cv.d_gt_12_pairs.begin(), cv.d_gt_12_pairs.end(), pair) ==
          cv.d_gt_12_pairs.end())
        cv.d_gt_12_pairs.push_back(pair);
    }
    bool on_boundary = t.b == box.b_lo || t.b == box.b_hi ||
                       t.n == box.n_hi || t.r == box.r_hi ||
                       (box.n_lo > 0 && t.n == box.n_lo) ||
                       (box.r_lo > 0 && t.r == box.r_lo);
    if (on_boundary)
      cv.warnings.push_back("boundary tuple " + describe(t) +
                            ": enlarging the box may add solutions");
    // The solved form of b must agree with the raw filter.
    if (t.a >= 2) {
      auto b = solve_b(t.a, t.d, t.n);
      if (!b || *b != t.b) {
        cv.pass = false;
        cv.warnings.push_back("solved-form mismatch at " + describe(t));
      }
    }
  }
  std::sort(cv.d_gt_12_pairs.begin(), cv.d_gt_12_pairs.end());

  // Classifier side: every candidate-pair solution landing inside the box
  // must be found by the raw enumeration.
  std::vector<OracleTuple> expected;
  for (auto [a, d] : fn_candidate_pairs()) {
    if (a < box.a_lo || a > box.a_hi || d < box.d_min) continue;
    for (int64_t n = box.n_lo; n <= box.n_hi; ++n) {
      auto b = solve_b(a, d, n);
      if (!b) continue;
      int64_t r = (-(Int(a) * a * n) + 2 * Int(a) * *b - d).value();
      if (r < 0) continue;
      OracleTuple t{a, *b, n, r, d, sectional_genus(a, *b, n)};
      if (*b < box.b_lo || *b > box.b_hi || r < box.r_lo || r > box.r_hi) {
        cv.warnings.push_back("clipped: candidate solution " + describe(t) +
                              " falls outside the box");
        continue;
      }
      expected.push_back(t);
    }
  }
  canonical_sort(expected);

  std::vector<OracleTuple> oracle59;
  for (const OracleTuple& t : oracle)
    if (t.a >= 5 && t.a <= 9) oracle59.push_back(t);

  for (const OracleTuple& t : oracle59)
    if (std::find(expected.begin(), expected.end(), t) == expected.end())
      cv.extra.push_back(t);
  for (const OracleTuple& t : expected)
    if (std::find(oracle59.begin(), oracle59.end(), t) == oracle59.end())
      cv.missing.push_back(t);

  if (!cv.extra.empty() || !cv.missing.empty()) cv.pass = false;
  return cv;
}

}  // namespace surf4
