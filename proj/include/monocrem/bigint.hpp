#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace monocrem {

/// Exact arbitrary-precision integer. All matrix arithmetic in this library
/// runs on this type; nothing is ever rounded or truncated.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs_val(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt gcd_val(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs_val(a), abs_val(b));
}

/// Floor division for b > 0: largest q with q*b <= a.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace monocrem
