#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "surf4/errors.hpp"
#include "surf4/picard.hpp"

using surf4::DivisorClass;
using surf4::SurfaceModel;

namespace {

DivisorClass random_class(int64_t r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> coeff(-100, 100);
  std::vector<int64_t> m(static_cast<size_t>(r));
  for (auto& x : m) x = coeff(rng);
  return DivisorClass(coeff(rng), coeff(rng), std::move(m));
}

}  // namespace

TEST_CASE("intersection table entries") {
  SurfaceModel s20(2, 0);
  DivisorClass c0(1, 0, {});
  DivisorClass f(0, 1, {});
  CHECK(intersect(c0, c0, s20) == -2);  // C_0^2 = -n
  CHECK(intersect(f, f, s20) == 0);
  CHECK(intersect(c0, f, s20) == 1);

  SurfaceModel s12(1, 2);
  DivisorClass e1(0, 0, {1, 0});
  DivisorClass e2(0, 0, {0, 1});
  DivisorClass f2(0, 1, {0, 0});
  CHECK(intersect(e1, e1, s12) == -1);  // E_i^2 = -1
  CHECK(intersect(e1, e2, s12) == 0);
  CHECK(intersect(e1, f2, s12) == 0);
  CHECK(intersect(DivisorClass(1, 0, {0, 0}), e1, s12) == 0);

  // f^2 = 0 independently of the model
  for (int64_t n = 0; n <= 5; ++n) {
    SurfaceModel s(n, 0);
    CHECK(intersect(DivisorClass(0, 1, {}), DivisorClass(0, 1, {}), s) == 0);
  }
}

TEST_CASE("hyperplane self-intersection for the degree-13 witness") {
  // H = 7C_0 + 8f - E_1 - ... - E_50 on (n=1, r=50); the closed form
  // -a^2 n + 2ab - r gives -49 + 112 - 50 = 13.
  SurfaceModel s(1, 50);
  DivisorClass h = DivisorClass::hyperplane(7, 8, 50);
  CHECK(intersect(h, h, s) == 13);
}

TEST_CASE("canonical class") {
  SurfaceModel s00(0, 0);
  DivisorClass k00 = canonical_class(s00);
  CHECK(k00 == DivisorClass(-2, -2, {}));

  SurfaceModel s12(1, 2);
  CHECK(canonical_class(s12) == DivisorClass(-2, -3, {1, 1}));

  for (int64_t n = 0; n <= 3; ++n)
    for (int64_t r = 0; r <= 5; ++r) {
      SurfaceModel s(n, r);
      DivisorClass k = canonical_class(s);
      CHECK(intersect(k, k, s) == 8 - r);
    }
}

TEST_CASE("K^2 = 8 - r across the whole sweep") {
  for (int64_t n = 0; n <= 50; ++n)
    for (int64_t r = 0; r <= 200; ++r) {
      SurfaceModel s(n, r);
      DivisorClass k = canonical_class(s);
      REQUIRE(intersect(k, k, s) == 8 - r);
    }
}

TEST_CASE("hyperplane classes satisfy the degree relation symbolically") {
  for (int64_t n = 0; n <= 10; ++n)
    for (int64_t r = 0; r <= 30; ++r) {
      SurfaceModel s(n, r);
      for (int64_t a = -20; a <= 20; ++a)
        for (int64_t b = -20; b <= 20; ++b) {
          DivisorClass h = DivisorClass::hyperplane(a, b, r);
          REQUIRE(intersect(h, h, s) == -a * a * n + 2 * a * b - r);
        }
    }
}

TEST_CASE("bilinear and symmetric on random classes") {
  std::mt19937_64 rng(0x9127a5);
  std::uniform_int_distribution<int64_t> small(-5, 5);
  for (int64_t r : {0, 1, 5, 30}) {
    SurfaceModel s(3, r);
    for (int i = 0; i < 200; ++i) {
      DivisorClass d1 = random_class(r, rng);
      DivisorClass d2 = random_class(r, rng);
      DivisorClass d3 = random_class(r, rng);
      int64_t x = small(rng), y = small(rng);
      CHECK(intersect(d1, d2, s) == intersect(d2, d1, s));
      CHECK(intersect(x * d1 + y * d2, d3, s) ==
            x * intersect(d1, d3, s) + y * intersect(d2, d3, s));
    }
  }
}

TEST_CASE("lattice operations keep rank and check it") {
  DivisorClass d1(1, 2, {3});
  DivisorClass d2(0, 1, {-1});
  CHECK((d1 + d2) == DivisorClass(1, 3, {2}));
  CHECK((d1 - d2) == DivisorClass(1, 1, {4}));
  CHECK((2 * d1) == DivisorClass(2, 4, {6}));
  CHECK_THROWS_AS(d1 + DivisorClass(0, 0, {}), surf4::DimensionError);
}

TEST_CASE("rank mismatches and invalid models are rejected") {
  SurfaceModel s(1, 2);
  DivisorClass wrong(1, 0, {0});
  DivisorClass ok(1, 0, {0, 0});
  CHECK_THROWS_AS(intersect(wrong, ok, s), surf4::DimensionError);
  CHECK_THROWS_AS(intersect(ok, wrong, s), surf4::DimensionError);
  CHECK_THROWS_AS(SurfaceModel(-1, 0), std::domain_error);
  CHECK_THROWS_AS(SurfaceModel(0, -1), std::domain_error);
  CHECK_THROWS_AS(DivisorClass::hyperplane(1, 1, -1), std::domain_error);
}
