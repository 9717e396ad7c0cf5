#include "surf4/fn_systems.hpp"

#include <algorithm>
#include <stdexcept>

#include "surf4/bounds.hpp"
#include "surf4/checked_int.hpp"
#include "surf4/invariants.hpp"
#include "surf4/ruled.hpp"

namespace surf4 {

const char* to_string(FnVerdict v) {
  return v == FnVerdict::survives ? "survives" : "excluded";
}

int64_t fn_bound_poly(int64_t a, int64_t d) {
  Int A = a, D = d;
  return (D * D * (A + 1) - 28 * (A - 1) * D + 16 * A * A - 16 * A + 16)
      .value();
}

std::vector<int64_t> fn_bound_range(int64_t a, bool strict) {
  if (a < 2) throw std::domain_error("fn_bound_range: requires a >= 2");
  // Upward parabola; both scan endpoints are provably positive
  // (value 16(a^2-a+1) at d = 0 and 1568 + 16a^2 - 16a + 16 at d = 28),
  // so the nonpositive set lies strictly inside the scan.
  constexpr int64_t kScanHi = 28;
  if (fn_bound_poly(a, 0) <= 0 || fn_bound_poly(a, kScanHi) <= 0)
    throw std::logic_error("fn_bound_range: scan window does not bracket the roots");
  std::vector<int64_t> out;
  for (int64_t d = 0; d <= kScanHi; ++d) {
    int64_t v = fn_bound_poly(a, d);
    if (strict ? v < 0 : v <= 0) out.push_back(d);
  }
  return out;
}

bool fn_high_ruling_positive(int64_t a_max) {
  if (a_max < 10)
    throw std::domain_error("fn_high_ruling_positive: requires a_max >= 10");
  for (int64_t a = 10; a <= a_max; ++a) {
    int64_t d0 = (14 * (a - 1)) / (a + 1);  // floor, both factors positive
    if (fn_bound_poly(a, d0) <= 0 || fn_bound_poly(a, d0 + 1) <= 0)
      return false;
  }
  return true;
}

bool fn_divisibility(int64_t a, int64_t d) {
  if (a < 2) throw std::domain_error("fn_divisibility: requires a >= 2");
  Int num = (Int(a) - 1) * (Int(d) * d - 7 * Int(d) + 10 * Int(a) - 4);
  return divides(6 * Int(a) - 10, num);
}

std::vector<std::pair<int64_t, int64_t>> fn_candidate_pairs(bool strict) {
  std::vector<std::pair<int64_t, int64_t>> out;
  for (int64_t a = 5; a <= 9; ++a)
    for (int64_t d : fn_bound_range(a, strict))
      if (fn_divisibility(a, d)) out.emplace_back(a, d);
  return out;  // sorted by construction: a ascending, d ascending within a
}

std::optional<int64_t> solve_b(int64_t a, int64_t d, int64_t n) {
  if (a < 2) throw std::domain_error("solve_b: requires a >= 2");
  Int num = Int(d) * d - 7 * Int(d) + 3 * Int(a) * a * n - 5 * Int(a) * n +
            10 * Int(a) - 4;
  Int den = 6 * Int(a) - 10;
  if (!divides(den, num)) return std::nullopt;
  return exact_div(num, den).value();
}

namespace {

// Solvability of b is periodic in n with period dividing 2, since
// 2*a*(3a-5) = a*(6a-10) vanishes mod 6a-10.
enum class NPattern { none, all, even_only, odd_only };

NPattern solvability_pattern(int64_t a, int64_t d) {
  bool even = solve_b(a, d, 0).has_value();
  bool odd = solve_b(a, d, 1).has_value();
  if (even && odd) return NPattern::all;
  if (even) return NPattern::even_only;
  if (odd) return NPattern::odd_only;
  return NPattern::none;
}

const char* pattern_text(NPattern p) {
  switch (p) {
    case NPattern::all: return "b integral for every n";
    case NPattern::even_only: return "b integral exactly for even n";
    case NPattern::odd_only: return "b integral exactly for odd n";
    case NPattern::none: return "no n admits an integral b";
  }
  return "?";
}

void push_distinct(std::vector<int64_t>& v, int64_t x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

struct SolutionFacts {
  std::vector<int64_t> fiber_relation;  // distinct 2b - a*n
  std::vector<int64_t> r_values;        // distinct r
  std::vector<int64_t> pi_values;       // distinct pi
};

// Probes n = 0..kProbeHi independently of the reporting window; pi, r
// and 2b - a*n are constant across solutions, which the callers assert.
constexpr int64_t kProbeHi = 40;

SolutionFacts probe_solutions(int64_t a, int64_t d) {
  SolutionFacts facts;
  for (int64_t n = 0; n <= kProbeHi; ++n) {
    auto b = solve_b(a, d, n);
    if (!b) continue;
    Int r = -(Int(a) * a * n) + 2 * Int(a) * *b - d;
    push_distinct(facts.fiber_relation, (2 * Int(*b) - Int(a) * n).value());
    push_distinct(facts.r_values, r.value());
    push_distinct(facts.pi_values, sectional_genus(a, *b, n));
  }
  return facts;
}

FnCandidate make_candidate(int64_t a, int64_t d, int64_t n_lo, int64_t n_hi) {
  FnCandidate c{a,
                d,
                fn_bound_poly(a, d),
                fn_divisibility(a, d),
                {},
                std::nullopt,
                FnVerdict::survives,
                {}};
  c.reasons.push_back("bound-poly: value " + std::to_string(c.f_value) +
                      " <= 0");
  c.reasons.push_back(
      std::string("divisibility: (6a-10) | (a-1)(d^2-7d+10a-4) ") +
      (c.divisibility_ok ? "holds" : "fails"));

  SolutionFacts facts = probe_solutions(a, d);
  if (facts.pi_values.size() > 1 || facts.r_values.size() > 1 ||
      facts.fiber_relation.size() > 1)
    throw std::logic_error("fn candidate: pi, r or 2b-a*n varies with n");
  if (!facts.pi_values.empty()) c.pi = facts.pi_values.front();

  NPattern pattern = solvability_pattern(a, d);
  if (!facts.fiber_relation.empty()) {
    c.reasons.push_back("fiber-relation: 2b - " + std::to_string(a) +
                        "n = " + std::to_string(facts.fiber_relation.front()) +
                        " for every solution; " + pattern_text(pattern));
  } else {
    c.reasons.push_back(pattern_text(pattern));
  }

  bool saw_r_zero = false;
  for (int64_t n = n_lo; n <= n_hi; ++n) {
    auto b = solve_b(a, d, n);
    if (!b) continue;
    int64_t r = (-(Int(a) * a * n) + 2 * Int(a) * *b - d).value();
    if (r < 0) {
      c.reasons.push_back("discarded n = " + std::to_string(n) +
                          ": negative blow-up count r = " + std::to_string(r));
      continue;
    }
    if (r == 0) saw_r_zero = true;
    c.b_solutions.push_back({n, *b, r});
  }
  if (saw_r_zero)
    c.reasons.push_back(
        "note: r = 0 solution listed (geometrically ruled case)");

  if (d <= 12) {
    c.verdict = FnVerdict::survives;
    c.reasons.push_back("degree-bound: d <= 12");
  } else if (!c.pi) {
    c.verdict = FnVerdict::excluded;
    c.reasons.push_back("no n admits an integral fiber coefficient b");
  } else {
    BoundVerdict acm = acm_exclusion(d, *c.pi);
    c.reasons.push_back("genus: pi = " + std::to_string(*c.pi) +
                        " for every solution");
    c.reasons.push_back("max-genus: G(" + std::to_string(d) +
                        ",4) = " + std::to_string(acm.witness[1]));
    if (acm.holds) {
      c.verdict = FnVerdict::excluded;
      c.reasons.push_back(
          "acm-exclusion: pi = G(d,4) forces an arithmetically "
          "Cohen-Macaulay hyperplane section, and an aCM surface in P^4 "
          "not of general type has d <= 8");
    } else {
      c.verdict = FnVerdict::survives;
      c.reasons.push_back("pi below G(d,4): no aCM contradiction");
    }
  }
  return c;
}

}  // namespace

Degree13Analysis degree13_analysis(int64_t n_lo, int64_t n_hi) {
  Degree13Analysis out{make_candidate(7, 13, n_lo, n_hi), {}, {}, {},
                       true, max_genus_g(13)};
  for (const BSolution& s : out.candidate.b_solutions) {
    push_distinct(out.two_b_minus_seven_n, (2 * Int(s.b) - 7 * Int(s.n)).value());
    push_distinct(out.r_values, s.r);
    push_distinct(out.pi_values, sectional_genus(7, s.b, s.n));
  }
  for (int64_t n = 0; n <= 1001; ++n) {
    bool solvable = solve_b(7, 13, n).has_value();
    if (solvable != (n % 2 == 1)) {
      out.solutions_exactly_odd_n = false;
      break;
    }
  }
  return out;
}

FnClassification classify_fn_systems(int64_t n_lo, int64_t n_hi, bool strict) {
  FnClassification out{strict,
                       n_lo,
                       n_hi,
                       {},
                       degree13_analysis(n_lo, n_hi),
                       0,
                       0,
                       0,
                       {},
                       {}};
  for (auto [a, d] : fn_candidate_pairs(strict))
    out.candidates.push_back(make_candidate(a, d, n_lo, n_hi));

  for (const FnCandidate& c : out.candidates) {
    if (c.verdict != FnVerdict::survives) continue;
    out.max_surviving_candidate_degree =
        std::max(out.max_surviving_candidate_degree, c.d);
    if (c.d > 12) out.surviving_d_gt_12.emplace_back(c.a, c.d);
  }

  // Ruling degrees a <= 4 are not handled by the divisibility route; the
  // scroll, conic-bundle, cubic and quartic tables bound them instead.
  for (int64_t a = 1; a <= 4; ++a)
    for (const CandidateRecord& rec : classify_ruled(a))
      out.delegated_max_degree = std::max(out.delegated_max_degree, rec.d);

  out.max_degree =
      std::max(out.max_surviving_candidate_degree, out.delegated_max_degree);
  out.notes.push_back(
      "low-ruling-delegation: a <= 4 is covered by the scroll, conic-bundle, "
      "cubic-ruling and quartic-ruling tables (max degree " +
      std::to_string(out.delegated_max_degree) + ")");
  return out;
}

}  // namespace surf4
