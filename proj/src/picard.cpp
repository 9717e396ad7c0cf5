#include "surf4/picard.hpp"

#include <stdexcept>
#include <utility>

#include "surf4/checked_int.hpp"
#include "surf4/errors.hpp"

namespace surf4 {

SurfaceModel::SurfaceModel(int64_t n_, int64_t r_) : n(n_), r(r_) {
  if (n < 0) throw std::domain_error("SurfaceModel: n must be >= 0");
  if (r < 0) throw std::domain_error("SurfaceModel: r must be >= 0");
}

DivisorClass::DivisorClass(int64_t a, int64_t b, std::vector<int64_t> m)
    : a_(a), b_(b), m_(std::move(m)) {}

DivisorClass DivisorClass::hyperplane(int64_t a, int64_t b, int64_t r) {
  if (r < 0) throw std::domain_error("DivisorClass::hyperplane: r must be >= 0");
  return DivisorClass(a, b, std::vector<int64_t>(static_cast<size_t>(r), -1));
}

namespace {

void require_same_rank(const DivisorClass& x, const DivisorClass& y) {
  if (x.rank() != y.rank())
    throw DimensionError("divisor classes have different lattice rank");
}

}  // namespace

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
  require_same_rank(x, y);
  std::vector<int64_t> m(x.m_.size());
  for (size_t i = 0; i < m.size(); ++i)
    m[i] = (Int(x.m_[i]) + Int(y.m_[i])).value();
  return DivisorClass((Int(x.a_) + Int(y.a_)).value(),
                      (Int(x.b_) + Int(y.b_)).value(), std::move(m));
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
  return x + (-y);
}

DivisorClass operator-(const DivisorClass& x) { return -1 * x; }

DivisorClass operator*(int64_t c, const DivisorClass& x) {
  std::vector<int64_t> m(x.m_.size());
  for (size_t i = 0; i < m.size(); ++i) m[i] = (Int(c) * Int(x.m_[i])).value();
  return DivisorClass((Int(c) * Int(x.a_)).value(),
                      (Int(c) * Int(x.b_)).value(), std::move(m));
}

int64_t intersect(const DivisorClass& d1, const DivisorClass& d2,
                  const SurfaceModel& s) {
  if (d1.rank() != s.rank() || d2.rank() != s.rank())
    throw DimensionError("divisor class rank does not match the surface lattice");
  Int acc = Int(d1.a()) * Int(d2.a()) * Int(-s.n);
  acc += Int(d1.a()) * Int(d2.b());
  acc += Int(d2.a()) * Int(d1.b());
  auto m1 = d1.m();
  auto m2 = d2.m();
  for (size_t i = 0; i < m1.size(); ++i) acc -= Int(m1[i]) * Int(m2[i]);
  return acc.value();
}

DivisorClass canonical_class(const SurfaceModel& s) {
  return DivisorClass(-2, (Int(-s.n) - 2).value(),
                      std::vector<int64_t>(static_cast<size_t>(s.r), 1));
}

}  // namespace surf4
