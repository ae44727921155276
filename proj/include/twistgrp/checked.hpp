#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

// Overflow-checked 64-bit integer arithmetic. Group components are exact
// integers; anything that would not fit in int64 throws instead of wrapping.

namespace twistgrp::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

/// Floor division; `d` must be positive.
inline std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  std::int64_t q = n / d;
  if ((n % d != 0) && (n < 0)) --q;
  return q;
}

/// Representative of n mod d in [0, d); `d` must be positive.
inline std::int64_t mod(std::int64_t n, std::int64_t d) {
  std::int64_t r = n % d;
  return r < 0 ? r + d : r;
}

/// m(m-1)/2, exact for every int64 m whose product fits.
inline std::int64_t triangular(std::int64_t m) {
  // one of m, m-1 is even; halve it before multiplying
  std::int64_t m1 = sub(m, 1);
  return (m % 2 == 0) ? mul(m / 2, m1) : mul(m, m1 / 2);
}

}  // namespace twistgrp::checked
