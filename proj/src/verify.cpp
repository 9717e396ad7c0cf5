#include "surf4/verify.hpp"

#include <algorithm>

#include "surf4/bounds.hpp"
#include "surf4/checked_int.hpp"
#include "surf4/fn_systems.hpp"
#include "surf4/invariants.hpp"
#include "surf4/oracle.hpp"
#include "surf4/picard.hpp"
#include "surf4/ruled.hpp"

namespace surf4 {

int VerificationReport::passed() const {
  return static_cast<int>(
      std::count_if(entries.begin(), entries.end(),
                    [](const VerificationEntry& e) { return e.pass; }));
}

int VerificationReport::failed() const {
  return static_cast<int>(entries.size()) - passed();
}

bool VerificationReport::all_pass() const { return failed() == 0; }

VerificationEntry make_entry(int criterion, std::string claim_id,
                             std::string citation, std::string expected,
                             std::string computed) {
  bool pass = expected == computed;
  return {criterion, std::move(claim_id), std::move(citation),
          std::move(expected), std::move(computed), pass};
}

namespace {

std::string pair_list(const std::vector<std::pair<int64_t, int64_t>>& v) {
  std::string s;
  for (const auto& [x, y] : v) {
    if (!s.empty()) s += ",";
    s += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
  return s.empty() ? "(none)" : s;
}

std::string int_list(const std::vector<int64_t>& v) {
  std::string s;
  for (int64_t x : v) {
    if (!s.empty()) s += ",";
    s += std::to_string(x);
  }
  return s.empty() ? "(none)" : s;
}

// 1. The cubic-ruled table.
VerificationEntry check_cubic_table() {
  std::vector<std::pair<int64_t, int64_t>> got;
  for (const CandidateRecord& rec : classify_ruled(3))
    if (rec.verdict == RuledVerdict::admissible && rec.pi)
      got.emplace_back(rec.d, *rec.pi);
  return make_entry(1, "cubic-ruled-table", "surfaces ruled in cubics",
                    "(5,2),(6,3),(7,5),(8,8),(9,12)", pair_list(got));
}

// 2. Bound ranges and the surviving candidate pairs.
VerificationEntry check_bound_ranges() {
  std::string got;
  for (int64_t a = 5; a <= 9; ++a) {
    std::vector<int64_t> range = fn_bound_range(a);
    for (size_t i = 1; i < range.size(); ++i)
      if (range[i] != range[i - 1] + 1) got += " a=" + std::to_string(a) + ":gap!";
    if (!got.empty()) got += " ";
    got += "a=" + std::to_string(a) + ":" + std::to_string(range.front()) +
           ".." + std::to_string(range.back());
  }
  return make_entry(2, "fn-bound-ranges",
                    "nonpositive range of the bound polynomial",
                    "a=5:4..14 a=6:5..15 a=7:6..15 a=8:7..15 a=9:9..14", got);
}

VerificationEntry check_candidate_pairs() {
  return make_entry(2, "fn-candidate-pairs", "bound + divisibility filter",
                    "(5,6),(5,11),(7,10),(7,13),(8,7)",
                    pair_list(fn_candidate_pairs()));
}

// 3. The degree-13 exclusion and the overall degree bound.
VerificationEntry check_degree13() {
  Degree13Analysis an = degree13_analysis(0, 20);
  std::string got = "2b-7n=" + int_list(an.two_b_minus_seven_n) +
                    "; odd n " + (an.solutions_exactly_odd_n ? "only" : "NOT only") +
                    "; r=" + int_list(an.r_values) +
                    "; pi=" + int_list(an.pi_values) +
                    "; G(13,4)=" + std::to_string(an.g13) + "; " +
                    to_string(an.candidate.verdict);
  return make_entry(3, "degree13-exclusion", "aCM contradiction at (7,13)",
                    "2b-7n=9; odd n only; r=50; pi=21; G(13,4)=21; excluded",
                    got);
}

VerificationEntry check_max_degree() {
  FnClassification cls = classify_fn_systems();
  std::string got = "max degree = " + std::to_string(cls.max_degree) +
                    "; surviving d>12: " + pair_list(cls.surviving_d_gt_12);
  return make_entry(3, "fn-max-degree", "overall degree bound",
                    "max degree = 12; surviving d>12: (none)", got);
}

// 4. The bound polynomial is positive for every ruling degree >= 10.
VerificationEntry check_high_ruling() {
  bool ok = fn_high_ruling_positive(1000);
  return make_entry(4, "high-ruling-cap",
                    "integer minimum of the bound polynomial",
                    "positive for every a in 10..1000",
                    ok ? "positive for every a in 10..1000"
                       : "nonpositive value found");
}

// 5. The degree range equals the set where Castelnuovo accepts the genus.
VerificationEntry check_range_equivalence() {
  int64_t mismatches = 0;
  for (int64_t a = 3; a <= 30; ++a) {
    std::vector<int64_t> range = castelnuovo_degree_range(a);
    for (int64_t d = 3; d <= 4 * a + 6; ++d) {
      bool in_range = std::find(range.begin(), range.end(), d) != range.end();
      bool accepted = castelnuovo_p3(d, degenerate_ruling_genus(d, a)).holds;
      if (in_range != accepted) ++mismatches;
    }
  }
  return make_entry(5, "castelnuovo-range-equivalence",
                    "quadratic range vs predicate", "0 mismatches (a = 3..30)",
                    std::to_string(mismatches) + " mismatches (a = 3..30)");
}

// 6. Lattice-computed degree/genus equal the closed forms, and the double
// point residual vanishes exactly when b solves the linear constraint.
VerificationEntry check_relation_identities() {
  int64_t violations = 0;
  int64_t cases = 0;
  for (int64_t n = 0; n <= 6; ++n) {
    for (int64_t r = 0; r <= 40; ++r) {
      SurfaceModel s(n, r);
      for (int64_t a = -15; a <= 15; ++a) {
        for (int64_t b = -15; b <= 15; ++b) {
          ++cases;
          DivisorClass h = DivisorClass::hyperplane(a, b, r);
          if (intersect(h, h, s) != degree(a, b, n, r)) ++violations;
          if (adjunction_genus(h, s) != sectional_genus(a, b, n)) ++violations;
          if (a >= 2) {
            Int lhs = Int(b) * (6 * Int(a) - 10);
            int64_t d = degree(a, b, n, r);
            Int rhs = Int(d) * d - 7 * Int(d) + 3 * Int(a) * a * n -
                      5 * Int(a) * n + 10 * Int(a) - 4;
            bool dp_zero = double_point_residual(a, b, n, r) == 0;
            if (dp_zero != (lhs == rhs)) ++violations;
          }
        }
      }
    }
  }
  return make_entry(6, "relation-identities", "lattice vs closed forms",
                    "0 violations in 275807 cases",
                    std::to_string(violations) + " violations in " +
                        std::to_string(cases) + " cases");
}

// 7. Raw enumeration agrees with the classifier route.
VerificationEntry check_cross_validation() {
  CrossValidation cv = cross_validate(default_box());
  std::string got = cv.pass ? "PASS" : "FAIL";
  if (!cv.pass)
    got += " (" + std::to_string(cv.extra.size()) + " extra, " +
           std::to_string(cv.missing.size()) + " missing)";
  if (!cv.warnings.empty())
    got += " [" + std::to_string(cv.warnings.size()) + " warnings]";
  return make_entry(7, "oracle-cross-validation",
                    "independent brute-force agreement", "PASS", got);
}

VerificationEntry check_d13_projection() {
  CrossValidation cv = cross_validate(default_box());
  return make_entry(7, "oracle-d13-projection", "only (7,13) has d > 12",
                    "(7,13)", pair_list(cv.d_gt_12_pairs));
}

// 8. Integrality and value of the max-genus formula.
VerificationEntry check_max_genus_integrality() {
  int64_t failures = 0;
  for (int64_t d = 13; d <= 10000; ++d) {
    int64_t rho = max_genus_rho(d);
    Int num = Int(d) * d - 3 * Int(rho) * (4 - rho);
    if (!divides(8, num)) ++failures;
  }
  return make_entry(8, "max-genus-integrality", "division by 8 is exact",
                    "exact for d = 13..10000",
                    failures == 0 ? "exact for d = 13..10000"
                                  : std::to_string(failures) + " failures");
}

VerificationEntry check_max_genus_d13() {
  return make_entry(8, "max-genus-d13", "G(13,4)", "21",
                    std::to_string(max_genus_g(13)));
}

}  // namespace

VerificationReport build_verification_report() {
  VerificationReport report;
  report.entries.push_back(check_cubic_table());
  report.entries.push_back(check_bound_ranges());
  report.entries.push_back(check_candidate_pairs());
  report.entries.push_back(check_degree13());
  report.entries.push_back(check_max_degree());
  report.entries.push_back(check_high_ruling());
  report.entries.push_back(check_range_equivalence());
  report.entries.push_back(check_relation_identities());
  report.entries.push_back(check_cross_validation());
  report.entries.push_back(check_d13_projection());
  report.entries.push_back(check_max_genus_integrality());
  report.entries.push_back(check_max_genus_d13());
  return report;
}

}  // namespace surf4
