#include "surf4/ruled.hpp"

#include <stdexcept>

#include "surf4/bounds.hpp"
#include "surf4/checked_int.hpp"

namespace surf4 {

const char* to_string(RuledBranch b) {
  switch (b) {
    case RuledBranch::degenerate_fiber: return "degenerate-fiber";
    case RuledBranch::external_classification: return "external-classification";
    case RuledBranch::nondegenerate_fiber_bound: return "nondegenerate-fiber-bound";
  }
  return "?";
}

const char* to_string(RuledVerdict v) {
  return v == RuledVerdict::admissible ? "admissible" : "excluded";
}

int64_t degenerate_ruling_genus(int64_t d, int64_t a) {
  if (a < 3)
    throw std::domain_error("degenerate_ruling_genus: requires a >= 3");
  Int x = Int(d) - Int(a) - 1;         // degree of the plane curve, minus 1
  Int plane = exact_div(x * (x - 1), 2);  // consecutive integers, exact
  return (plane + Int(a) - 1).value();
}

namespace {

int64_t castelnuovo_quadratic(int64_t a, int64_t d) {
  Int A = a, D = d;
  return (D * D - 2 * D * (2 * A + 1) + 2 * A * A + 10 * A - 4).value();
}

int64_t eighth_bound_quadratic(int64_t a, int64_t d) {
  Int A = a, D = d;
  return (3 * D * D - 2 * D * (4 * A + 6) + 4 * A * A + 20 * A - 8).value();
}

// Collects { d in [0, hi] : q(a, d) rel 0 }. Both quadratics open upward
// and are positive at 0 and hi, so the solution set lies inside the scan.
std::vector<int64_t> scan_quadratic(int64_t a, int64_t hi,
                                    int64_t (*q)(int64_t, int64_t),
                                    bool strict) {
  if (q(a, 0) <= 0 || q(a, hi) <= 0)
    throw std::logic_error("scan_quadratic: scan window does not bracket the roots");
  std::vector<int64_t> out;
  for (int64_t d = 0; d <= hi; ++d) {
    int64_t v = q(a, d);
    if (strict ? v < 0 : v <= 0) out.push_back(d);
  }
  return out;
}

std::string genus_reason(int64_t pi) {
  return "degenerate-fiber-genus: pi = (d-a-1)(d-a-2)/2 + a - 1 = " +
         std::to_string(pi);
}

}  // namespace

std::vector<int64_t> castelnuovo_degree_range(int64_t a) {
  if (a < 3)
    throw std::domain_error("castelnuovo_degree_range: requires a >= 3");
  return scan_quadratic(a, 4 * a + 4, castelnuovo_quadratic, /*strict=*/false);
}

std::vector<int64_t> eighth_bound_degree_range(int64_t a) {
  if (a < 3)
    throw std::domain_error("eighth_bound_degree_range: requires a >= 3");
  return scan_quadratic(a, 2 * a + 6, eighth_bound_quadratic, /*strict=*/true);
}

std::vector<CandidateRecord> classify_ruled(int64_t a) {
  if (a < 1) throw std::domain_error("classify_ruled: requires a >= 1");

  std::vector<CandidateRecord> rows;

  if (a == 1) {
    rows.push_back({1, 3, 0, RuledVerdict::admissible,
                    RuledBranch::external_classification,
                    {"scroll-classification: the only rational scroll in P^4 "
                     "is the cubic scroll"}});
    return rows;
  }

  if (a == 2) {
    rows.push_back({2, 4, 1, RuledVerdict::admissible,
                    RuledBranch::external_classification,
                    {"conic-bundle-classification: Del Pezzo surface, d = 4",
                     "genus from external classification"}});
    rows.push_back({2, 5, 2, RuledVerdict::admissible,
                    RuledBranch::external_classification,
                    {"conic-bundle-classification: Castelnuovo surface, d = 5",
                     "genus from external classification"}});
    return rows;
  }

  // a >= 3: degenerate-fiber branch through the genus formula.
  for (int64_t d : castelnuovo_degree_range(a)) {
    int64_t pi = degenerate_ruling_genus(d, a);
    CandidateRecord rec{a, d, pi, RuledVerdict::admissible,
                        RuledBranch::degenerate_fiber,
                        {genus_reason(pi)}};
    if (a >= 5) {
      BoundVerdict cv = castelnuovo_p3(d, pi);
      rec.reasons.push_back("castelnuovo_p3: 4*pi = " +
                            std::to_string(cv.witness[0]) +
                            (cv.holds ? " <= " : " > ") +
                            std::to_string(cv.witness[1]) + " = (d-2)^2");
      if (!cv.holds) {
        rec.verdict = RuledVerdict::excluded;
      }
    }
    rows.push_back(std::move(rec));
  }

  if (a == 4) {
    rows.push_back({4, NONDEGENERATE_FIBER_MAX_DEGREE, std::nullopt,
                    RuledVerdict::admissible,
                    RuledBranch::nondegenerate_fiber_bound,
                    {"nonspecial-bound: a non-degenerate quartic ruling gives "
                     "h^1(O_S(1)) = 0, and nonspecial rational surfaces in "
                     "P^4 have d <= 9"}});
  }

  return rows;
}

}  // namespace surf4
