#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "h10/bigint.hpp"

namespace h10 {

// Exact rational in the unique reduced form hat/bar with bar >= 1 and
// gcd(|hat|, bar) = 1. Zero is (0, 1). Immutable after construction.
class Rational {
 public:
  Rational() = default;
  Rational(BigInt value) : hat_(std::move(value)) {}
  Rational(long long value) : hat_(value) {}
  Rational(int value) : hat_(value) {}

  // Reduces a/b to lowest terms with the sign on the numerator.
  // Throws ValidationError when b = 0.
  Rational(BigInt numerator, BigInt denominator);

  const BigInt& hat() const { return hat_; }
  const BigInt& bar() const { return bar_; }

  bool is_zero() const { return hat_ == 0; }
  bool is_integer() const { return bar_ == 1; }

  Rational operator-() const;
  Rational operator+(const Rational& other) const;
  Rational operator-(const Rational& other) const;
  Rational operator*(const Rational& other) const;
  // Throws ValidationError when other = 0.
  Rational operator/(const Rational& other) const;

  // Reduced form makes structural equality the arithmetic one.
  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& other) const;

  // "a/b", or "a" when the denominator is 1.
  std::string str() const;
  // Strict inverse of str(): optional leading '-', decimal digits,
  // optional "/<positive digits>". Throws ValidationError otherwise.
  static Rational parse(std::string_view text);

 private:
  BigInt hat_ = 0;
  BigInt bar_ = 1;
};

Rational pow(const Rational& base, unsigned exp);

// Tuples of rationals; components of Q^n (length >= 1 wherever the codec
// produces or consumes them).
using QTuple = std::vector<Rational>;

}  // namespace h10
