#pragma once

// Overflow-checked signed 64-bit arithmetic. Every invariant computed by the
// library goes through these helpers so that huge inputs fail loudly instead
// of wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gonseq {

using Int = std::int64_t;

namespace checked {

[[noreturn]] inline void overflow(const char* op) {
  throw std::overflow_error(std::string("integer overflow in ") + op);
}

inline Int add(Int x, Int y) {
  Int out;
  if (__builtin_add_overflow(x, y, &out)) overflow("add");
  return out;
}

inline Int sub(Int x, Int y) {
  Int out;
  if (__builtin_sub_overflow(x, y, &out)) overflow("sub");
  return out;
}

inline Int mul(Int x, Int y) {
  Int out;
  if (__builtin_mul_overflow(x, y, &out)) overflow("mul");
  return out;
}

inline Int mul(Int x, Int y, Int z) { return mul(mul(x, y), z); }

/// Floor division; the divisor must be positive.
inline Int floor_div(Int x, Int y) {
  if (y <= 0) throw std::invalid_argument("floor_div: non-positive divisor");
  Int q = x / y;
  if ((x % y != 0) && (x < 0)) --q;
  return q;
}

/// Remainder matching floor_div, always in [0, y).
inline Int floor_mod(Int x, Int y) { return sub(x, mul(floor_div(x, y), y)); }

} // namespace checked
} // namespace gonseq
