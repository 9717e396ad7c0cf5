#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace surf4 {

/// A Hirzebruch surface F_n blown up at r points. Fixes the Picard
/// lattice: rank r + 2, basis C_0 (section, self-intersection -n),
/// f (fiber), E_1..E_r (exceptional classes).
///
/// Sign convention used throughout:
///   C_0^2 = -n,  C_0.f = 1,  f^2 = 0,  C_0.E_i = f.E_i = 0,
///   E_i.E_j = -delta_ij.
/// With this convention K^2 = 8 - r and (aC_0+bf-Sum E_i)^2 = -a^2 n + 2ab - r.
struct SurfaceModel {
  int64_t n;  // Hirzebruch index, n >= 0
  int64_t r;  // number of blown-up points, r >= 0

  SurfaceModel(int64_t n, int64_t r);

  int64_t rank() const { return r + 2; }

  friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

/// Integer divisor class a*C_0 + b*f + Sum m_i*E_i. The m_i are stored
/// signed; hyperplane classes with simple base points use m_i = -1 and
/// are built with DivisorClass::hyperplane.
class DivisorClass {
 public:
  DivisorClass(int64_t a, int64_t b, std::vector<int64_t> m);

  /// a*C_0 + b*f - E_1 - ... - E_r (simple base points).
  static DivisorClass hyperplane(int64_t a, int64_t b, int64_t r);

  int64_t a() const { return a_; }
  int64_t b() const { return b_; }
  std::span<const int64_t> m() const { return m_; }
  int64_t rank() const { return static_cast<int64_t>(m_.size()) + 2; }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  // Lattice module structure; operands must have equal rank.
  friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
  friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
  friend DivisorClass operator-(const DivisorClass& x);
  friend DivisorClass operator*(int64_t c, const DivisorClass& x);

 private:
  int64_t a_;
  int64_t b_;
  std::vector<int64_t> m_;
};

/// Intersection number D1.D2 on S. Bilinear and symmetric:
///   a1*a2*(-n) + a1*b2 + a2*b1 - Sum m1_i*m2_i.
/// Throws DimensionError unless both classes have rank r + 2.
int64_t intersect(const DivisorClass& d1, const DivisorClass& d2,
                  const SurfaceModel& s);

/// K_S = -2*C_0 - (n+2)*f + E_1 + ... + E_r.
DivisorClass canonical_class(const SurfaceModel& s);

}  // namespace surf4
