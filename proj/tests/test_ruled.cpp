#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "surf4/bounds.hpp"
#include "surf4/checked_int.hpp"
#include "surf4/ruled.hpp"

using surf4::CandidateRecord;
using surf4::RuledBranch;
using surf4::RuledVerdict;

namespace {

std::vector<int64_t> iota_range(int64_t lo, int64_t hi) {
  std::vector<int64_t> v;
  for (int64_t d = lo; d <= hi; ++d) v.push_back(d);
  return v;
}

int64_t castelnuovo_quadratic(int64_t a, int64_t d) {
  surf4::Int A = a, D = d;
  return (D * D - 2 * D * (2 * A + 1) + 2 * A * A + 10 * A - 4).value();
}

int64_t eighth_bound_quadratic(int64_t a, int64_t d) {
  surf4::Int A = a, D = d;
  return (3 * D * D - 2 * D * (4 * A + 6) + 4 * A * A + 20 * A - 8).value();
}

}  // namespace

TEST_CASE("degenerate-fiber genus formula") {
  CHECK(surf4::degenerate_ruling_genus(9, 3) == 12);
  CHECK(surf4::degenerate_ruling_genus(5, 3) == 2);
  for (int64_t a = 3; a <= 10; ++a)
    CHECK(surf4::degenerate_ruling_genus(a + 1, a) == a - 1);
  CHECK_THROWS_AS(surf4::degenerate_ruling_genus(5, 2), std::domain_error);
}

TEST_CASE("castelnuovo degree range") {
  CHECK(surf4::castelnuovo_degree_range(3) == iota_range(5, 9));
  CHECK(surf4::castelnuovo_degree_range(4) == iota_range(6, 12));
  CHECK(surf4::castelnuovo_degree_range(5) == iota_range(6, 16));
  CHECK(castelnuovo_quadratic(3, 4) > 0);
  CHECK(castelnuovo_quadratic(3, 10) > 0);
  CHECK_THROWS_AS(surf4::castelnuovo_degree_range(2), std::domain_error);
}

TEST_CASE("eighth-bound degree range") {
  // a = 7: integers where 3d^2 - 68d + 328 < 0.
  CHECK(surf4::eighth_bound_degree_range(7) == iota_range(7, 15));
  for (int64_t d = 6; d <= 20; ++d) {
    auto range = surf4::eighth_bound_degree_range(7);
    bool member = std::find(range.begin(), range.end(), d) != range.end();
    CHECK(member == (eighth_bound_quadratic(7, d) < 0));
  }

  // Strictness: at a = 5 the quadratic vanishes at d = 12, so 12 is out.
  CHECK(eighth_bound_quadratic(5, 12) == 0);
  CHECK(surf4::eighth_bound_degree_range(5) == iota_range(6, 11));

  // In d > 12 territory the refined range sits inside the full range.
  for (int64_t a = 3; a <= 12; ++a) {
    auto refined = surf4::eighth_bound_degree_range(a);
    auto full = surf4::castelnuovo_degree_range(a);
    for (int64_t d : refined) {
      if (d <= 12) continue;
      CHECK(std::find(full.begin(), full.end(), d) != full.end());
    }
  }
  CHECK_THROWS_AS(surf4::eighth_bound_degree_range(1), std::domain_error);
}

TEST_CASE("range equals the set the predicate accepts") {
  for (int64_t a = 3; a <= 30; ++a) {
    auto range = surf4::castelnuovo_degree_range(a);
    for (int64_t d = 3; d <= 4 * a + 6; ++d) {
      bool member = std::find(range.begin(), range.end(), d) != range.end();
      bool accepted =
          surf4::castelnuovo_p3(d, surf4::degenerate_ruling_genus(d, a)).holds;
      REQUIRE(member == accepted);
    }
  }
}

TEST_CASE("scroll and conic-bundle rows") {
  auto scroll = surf4::classify_ruled(1);
  REQUIRE(scroll.size() == 1);
  CHECK(scroll[0].a == 1);
  CHECK(scroll[0].d == 3);
  CHECK(scroll[0].pi == 0);
  CHECK(scroll[0].verdict == RuledVerdict::admissible);
  CHECK(scroll[0].branch == RuledBranch::external_classification);

  auto conic = surf4::classify_ruled(2);
  REQUIRE(conic.size() == 2);
  CHECK(conic[0].d == 4);
  CHECK(conic[0].pi == 1);
  CHECK(conic[1].d == 5);
  CHECK(conic[1].pi == 2);
}

TEST_CASE("cubic-ruled table") {
  auto rows = surf4::classify_ruled(3);
  REQUIRE(rows.size() == 5);
  std::vector<std::pair<int64_t, int64_t>> got;
  for (const CandidateRecord& rec : rows) {
    REQUIRE(rec.pi.has_value());
    CHECK(rec.verdict == RuledVerdict::admissible);
    got.emplace_back(rec.d, *rec.pi);
  }
  std::vector<std::pair<int64_t, int64_t>> want{
      {5, 2}, {6, 3}, {7, 5}, {8, 8}, {9, 12}};
  CHECK(got == want);
  // strictly increasing genus across the table
  for (size_t i = 1; i < got.size(); ++i) CHECK(got[i].second > got[i - 1].second);
}

TEST_CASE("quartic-ruled rows cap the degree at 12") {
  auto rows = surf4::classify_ruled(4);
  int64_t max_d = 0;
  bool has_bound_row = false;
  for (const CandidateRecord& rec : rows) {
    max_d = std::max(max_d, rec.d);
    if (rec.branch == RuledBranch::nondegenerate_fiber_bound) {
      has_bound_row = true;
      CHECK(rec.d == surf4::NONDEGENERATE_FIBER_MAX_DEGREE);
      CHECK_FALSE(rec.pi.has_value());
    }
  }
  CHECK(max_d == 12);
  CHECK(has_bound_row);
  REQUIRE(rows.size() == 8);  // d = 6..12 plus the bound row
}

TEST_CASE("records with a >= 3 satisfy the genus formula") {
  for (int64_t a = 3; a <= 12; ++a)
    for (const CandidateRecord& rec : surf4::classify_ruled(a)) {
      if (rec.branch != RuledBranch::degenerate_fiber) continue;
      REQUIRE(rec.pi.has_value());
      CHECK(*rec.pi == surf4::degenerate_ruling_genus(rec.d, a));
    }
}

TEST_CASE("rows for a >= 5 carry a castelnuovo annotation") {
  for (const CandidateRecord& rec : surf4::classify_ruled(5)) {
    bool annotated = false;
    for (const std::string& reason : rec.reasons)
      if (reason.find("castelnuovo_p3") != std::string::npos) annotated = true;
    CHECK(annotated);
    CHECK(rec.verdict == RuledVerdict::admissible);
  }
}

TEST_CASE("excluded rows always carry reasons") {
  for (int64_t a : {1, 2, 3, 4, 5, 9})
    for (const CandidateRecord& rec : surf4::classify_ruled(a)) {
      if (rec.verdict == RuledVerdict::excluded) CHECK(!rec.reasons.empty());
      CHECK(!rec.reasons.empty());
    }
}

TEST_CASE("invalid ruling degree") {
  CHECK_THROWS_AS(surf4::classify_ruled(0), std::domain_error);
  CHECK_THROWS_AS(surf4::classify_ruled(-3), std::domain_error);
}
