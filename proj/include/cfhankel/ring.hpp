#pragma once

#include "cfhankel/error.hpp"
#include "cfhankel/scalar.hpp"

#include <string>

namespace cfh {

template <ExactRing T>
T divide_exact(const T& num, const T& den, Errc code, const std::string& context) {
  auto q = try_divide(num, den);
  if (!q) throw Error(code, context);
  return *std::move(q);
}

template <ExactRing T>
T power(const T& base, unsigned long long e) {
  T result(1);
  T b = base;
  for (; e != 0; e >>= 1) {
    if (e & 1U) result = result * b;
    if (e > 1) b = b * b;
  }
  return result;
}

/// The unit ±1 as a ring element.
template <ExactRing T>
T signed_one(int sign) {
  return sign < 0 ? -T(1) : T(1);
}

}  // namespace cfh
