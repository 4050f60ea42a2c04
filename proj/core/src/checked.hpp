#pragma once

#include <cstdint>

#include "dpz/errors.hpp"

namespace dpz::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw ArithmeticOverflow("integer overflow in lattice arithmetic");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw ArithmeticOverflow("integer overflow in lattice arithmetic");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw ArithmeticOverflow("integer overflow in lattice arithmetic");
  return out;
}

}  // namespace dpz::detail
