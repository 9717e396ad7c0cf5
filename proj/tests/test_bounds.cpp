#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surf4/bounds.hpp"
#include "surf4/checked_int.hpp"

TEST_CASE("castelnuovo predicate in P^3") {
  CHECK(surf4::castelnuovo_p3(9, 12).holds);         // 48 <= 49
  CHECK_FALSE(surf4::castelnuovo_p3(9, 13).holds);   // 52 > 49
  CHECK(surf4::castelnuovo_p3(4, 1).holds);          // 4 <= 4, boundary
  CHECK(surf4::castelnuovo_p3(9, 12).witness == std::vector<int64_t>{48, 49});
  CHECK_THROWS_AS(surf4::castelnuovo_p3(2, 0), std::domain_error);
}

TEST_CASE("max genus of space curves off cubic surfaces") {
  CHECK(surf4::max_genus_g(13) == 21);
  CHECK(surf4::max_genus_g(14) == 24);  // rho = 2, (196 - 12)/8 = 23
  CHECK(surf4::max_genus_g(16) == 33);  // rho = 0, 256/8 = 32
  CHECK(surf4::max_genus_rho(13) == 3);
  CHECK(surf4::max_genus_rho(16) == 0);
  CHECK_THROWS_AS(surf4::max_genus_g(12), std::domain_error);
  CHECK_THROWS_AS(surf4::max_genus_g(9), std::domain_error);
}

TEST_CASE("strict eighth bound") {
  CHECK(surf4::strict_eighth_bound(13, 21).holds);         // 160 < 169
  CHECK(surf4::strict_eighth_bound(13, 22).holds);         // 168 < 169
  CHECK_FALSE(surf4::strict_eighth_bound(13, 23).holds);   // 176 >= 169
  CHECK_FALSE(surf4::strict_eighth_bound(4, 3).holds);     // 16 < 16 fails
}

TEST_CASE("aCM exclusion fires exactly at the max genus") {
  CHECK(surf4::acm_exclusion(13, 21).holds);
  CHECK_FALSE(surf4::acm_exclusion(13, 20).holds);
  CHECK(surf4::acm_exclusion(14, 24).holds);
  CHECK_THROWS_AS(surf4::acm_exclusion(12, 10), std::domain_error);
}

TEST_CASE("witnesses recompute the verdicts") {
  for (auto [d, pi] : {std::pair<int64_t, int64_t>{9, 12}, {9, 13}, {4, 1}}) {
    surf4::BoundVerdict v = surf4::castelnuovo_p3(d, pi);
    CHECK(v.holds == (v.witness[0] <= v.witness[1]));
  }
  for (auto [d, pi] : {std::pair<int64_t, int64_t>{13, 21}, {13, 23}}) {
    surf4::BoundVerdict v = surf4::strict_eighth_bound(d, pi);
    CHECK(v.holds == (v.witness[0] < v.witness[1]));
  }
}

TEST_CASE("max genus numerator is divisible by 8 and nondecreasing") {
  int64_t prev = 0;
  for (int64_t d = 13; d <= 10000; ++d) {
    int64_t rho = surf4::max_genus_rho(d);
    surf4::Int num = surf4::Int(d) * d - 3 * surf4::Int(rho) * (4 - rho);
    REQUIRE(surf4::divides(8, num));
    int64_t g = surf4::max_genus_g(d);
    REQUIRE(g >= prev);
    prev = g;
  }
}

TEST_CASE("below the max genus the strict bound can only fail at equality") {
  for (int64_t d = 13; d <= 200; ++d) {
    int64_t g = surf4::max_genus_g(d);
    for (int64_t pi = 0; pi <= g; ++pi) {
      bool strict = surf4::strict_eighth_bound(d, pi).holds;
      REQUIRE((strict || pi == g));
    }
  }
}
