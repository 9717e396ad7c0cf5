#pragma once

#include <stdexcept>

namespace surf4 {

/// Two divisor classes were combined across lattices of different rank
/// (or on surfaces with different Hirzebruch index).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An adjunction computation produced a half-integer genus. On the
/// lattices this library models, D.(D+K) is even for every integral
/// class, so this fires only on broken internal state.
struct ParityError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace surf4
