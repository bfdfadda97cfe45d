#pragma once

#include <cstdint>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace kmdk {

// Coordinates of weights and roots. Arithmetic on them goes through the
// checked helpers; an overflow surfaces as Errc::Overflow, never wraps.
using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int add_checked(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    fail(Errc::Overflow, "integer overflow in addition");
  return r;
}

inline Int sub_checked(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    fail(Errc::Overflow, "integer overflow in subtraction");
  return r;
}

inline Int mul_checked(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(Errc::Overflow, "integer overflow in multiplication");
  return r;
}

// a - k*b
inline Int axpy_checked(Int a, Int k, Int b) {
  return sub_checked(a, mul_checked(k, b));
}

inline Int to_int(const BigInt &v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    fail(Errc::Overflow, "value does not fit in 64 bits");
  return static_cast<Int>(v);
}

} // namespace kmdk
