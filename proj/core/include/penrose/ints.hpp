#pragma once

#include <cstdint>

#include "penrose/errors.hpp"

namespace penrose {

using Int = std::int64_t;

// Exact arithmetic helpers.  All quantities in this library are small in
// practice, but nothing here is allowed to wrap silently.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

// n choose k, exact.
Int binomial(Int n, Int k);

}  // namespace penrose
