#include "h10/codec.hpp"

#include "h10/errors.hpp"
#include "h10/primes.hpp"

namespace h10 {

QTuple decode_tuple(const BigInt& x, unsigned n) {
  if (x < 0) {
    throw ValidationError("decode_tuple needs x >= 0");
  }
  if (n == 0) {
    throw ValidationError("decode_tuple needs n >= 1");
  }
  const BigInt v = x + 1;
  QTuple tuple;
  tuple.reserve(n);
  for (unsigned i = 1; i <= n; ++i) {
    PrimeTriple triple = prime_triple(i);
    const unsigned a = multiplicity(triple.p, v);
    const unsigned b = multiplicity(triple.q, v);
    const unsigned c = multiplicity(triple.r, v);
    Rational component{BigInt(b), BigInt(c) + 1};
    if (a % 2 == 1) component = -component;
    tuple.push_back(component);
  }
  return tuple;
}

namespace {

unsigned exponent_of(const BigInt& e) {
  if (e > 1000000) {
    throw ValidationError("encode_tuple: component magnitude beyond supported scale");
  }
  return e.convert_to<unsigned>();
}

}  // namespace

BigInt encode_tuple(const QTuple& tuple) {
  if (tuple.empty()) {
    throw ValidationError("encode_tuple needs a tuple of length >= 1");
  }
  BigInt v = 1;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    const Rational& component = tuple[i];
    if (component.is_zero()) continue;  // all three exponents zero
    PrimeTriple triple = prime_triple(static_cast<std::uint64_t>(i) + 1);
    if (component.hat() < 0) v *= triple.p;
    v *= big_pow(BigInt(triple.q), exponent_of(big_abs(component.hat())));
    v *= big_pow(BigInt(triple.r), exponent_of(component.bar() - 1));
  }
  return v - 1;
}

QTuple project(const QTuple& tuple, const RingSpec& target) {
  for (const Rational& component : tuple) {
    if (!contains(target, component)) {
      return QTuple(tuple.size(), Rational{0});
    }
  }
  return tuple;
}

QTuple surjection(const RingSpec& target, unsigned n, const BigInt& i) {
  QTuple decoded = decode_tuple(i, n);
  if (target.is_subring()) {
    return project(decoded, target);
  }
  // tau-presented target: land in N^n first, then feed each natural through
  // the enumeration of the target as an index.
  QTuple naturals = project(decoded, RingSpec::N());
  QTuple result;
  result.reserve(n);
  for (const Rational& index : naturals) {
    result.push_back(enumerate_element(target, index.hat()));
  }
  return result;
}

}  // namespace h10
