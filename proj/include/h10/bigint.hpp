#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace h10 {

// Arbitrary-precision signed integer. Division and remainder truncate
// toward zero, like the built-in integer types.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_abs(const BigInt& a) { return boost::multiprecision::abs(a); }

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

// Floor of the square root; b >= 0.
inline BigInt big_isqrt(const BigInt& b) { return boost::multiprecision::sqrt(b); }

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

}  // namespace h10
