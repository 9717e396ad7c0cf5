#pragma once

#include <cstdint>
#include <stdexcept>

namespace surf4 {

/// 64-bit signed integer whose arithmetic throws std::overflow_error
/// instead of wrapping. Every quantity in this library is exact; a
/// result that does not fit in 64 bits is a hard error, never a wrap.
class Int {
 public:
  constexpr Int() = default;
  constexpr Int(int64_t v) : v_(v) {}  // implicit on purpose

  constexpr int64_t value() const { return v_; }

  friend Int operator+(Int x, Int y) {
    int64_t out;
    if (__builtin_add_overflow(x.v_, y.v_, &out))
      throw std::overflow_error("Int: addition overflow");
    return Int(out);
  }

  friend Int operator-(Int x, Int y) {
    int64_t out;
    if (__builtin_sub_overflow(x.v_, y.v_, &out))
      throw std::overflow_error("Int: subtraction overflow");
    return Int(out);
  }

  friend Int operator*(Int x, Int y) {
    int64_t out;
    if (__builtin_mul_overflow(x.v_, y.v_, &out))
      throw std::overflow_error("Int: multiplication overflow");
    return Int(out);
  }

  friend Int operator-(Int x) { return Int(0) - x; }

  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }

  friend constexpr bool operator==(Int, Int) = default;
  friend constexpr auto operator<=>(Int, Int) = default;

 private:
  int64_t v_ = 0;
};

/// True iff divisor != 0 and divisor | dividend (sign-agnostic).
inline bool divides(Int divisor, Int dividend) {
  if (divisor.value() == 0) throw std::domain_error("divides: zero divisor");
  if (divisor.value() == -1) return true;  // INT64_MIN % -1 is UB
  return dividend.value() % divisor.value() == 0;
}

/// Exact quotient; throws std::logic_error when the division leaves a
/// remainder (callers use this only where divisibility is an invariant).
inline Int exact_div(Int dividend, Int divisor) {
  if (!divides(divisor, dividend))
    throw std::logic_error("exact_div: inexact division");
  if (divisor.value() == -1) return -dividend;
  return Int(dividend.value() / divisor.value());
}

inline bool is_even(Int x) { return x.value() % 2 == 0; }

}  // namespace surf4
