#include "h10/rational.hpp"

#include <cctype>

#include "h10/errors.hpp"

namespace h10 {

Rational::Rational(BigInt numerator, BigInt denominator) {
  if (denominator == 0) {
    throw ValidationError("invalid denominator: 0");
  }
  if (numerator == 0) {
    return;  // canonical zero (0, 1)
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  BigInt g = big_gcd(big_abs(numerator), denominator);
  hat_ = numerator / g;
  bar_ = denominator / g;
}

Rational Rational::operator-() const {
  Rational r;
  r.hat_ = -hat_;
  r.bar_ = bar_;
  return r;
}

Rational Rational::operator+(const Rational& other) const {
  return Rational(hat_ * other.bar_ + other.hat_ * bar_, bar_ * other.bar_);
}

Rational Rational::operator-(const Rational& other) const {
  return Rational(hat_ * other.bar_ - other.hat_ * bar_, bar_ * other.bar_);
}

Rational Rational::operator*(const Rational& other) const {
  return Rational(hat_ * other.hat_, bar_ * other.bar_);
}

Rational Rational::operator/(const Rational& other) const {
  if (other.is_zero()) {
    throw ValidationError("division by zero");
  }
  return Rational(hat_ * other.bar_, bar_ * other.hat_);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  BigInt lhs = hat_ * other.bar_;
  BigInt rhs = other.hat_ * bar_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = hat_.str();
  if (bar_ != 1) {
    s += "/";
    s += bar_.str();
  }
  return s;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { throw ValidationError("not a rational literal: \"" + std::string(text) + "\""); };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t to = from;
    while (to < text.size() && std::isdigit(static_cast<unsigned char>(text[to]))) ++to;
    return to;
  };
  std::size_t num_end = digits(pos);
  if (num_end == pos) fail();
  BigInt num{std::string(text.substr(pos, num_end - pos))};
  if (negative) num = -num;
  if (num_end == text.size()) {
    return Rational(std::move(num));
  }
  if (text[num_end] != '/') fail();
  std::size_t den_begin = num_end + 1;
  std::size_t den_end = digits(den_begin);
  if (den_end == den_begin || den_end != text.size()) fail();
  BigInt den{std::string(text.substr(den_begin, den_end - den_begin))};
  return Rational(std::move(num), std::move(den));
}

Rational pow(const Rational& base, unsigned exp) {
  Rational acc{1};
  Rational b = base;
  while (exp > 0) {
    if (exp & 1u) acc = acc * b;
    b = b * b;
    exp >>= 1u;
  }
  return acc;
}

}  // namespace h10
