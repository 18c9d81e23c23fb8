#include "h10/rings.hpp"

#include <cctype>

#include "h10/codec.hpp"
#include "h10/errors.hpp"

namespace h10 {

RingSpec RingSpec::Z() { return RingSpec(RingKind::integers, 0); }

RingSpec RingSpec::cZ(BigInt c) {
  if (c == 0) {
    throw ValidationError("c*Z needs a non-zero c");
  }
  return RingSpec(RingKind::c_multiples, std::move(c));
}

RingSpec RingSpec::localization(BigInt m) {
  if (m < 2) {
    throw ValidationError("Z[1/m] needs m >= 2");
  }
  return RingSpec(RingKind::localization, std::move(m));
}

RingSpec RingSpec::Q() { return RingSpec(RingKind::rationals, 0); }

RingSpec RingSpec::N() { return RingSpec(RingKind::naturals, 0); }

RingSpec RingSpec::parse(std::string_view text) {
  auto fail = [&] {
    throw ValidationError("not a ring spec: \"" + std::string(text) +
                          "\" (expected Z, Q, N, Z[1/m], or c*Z)");
  };
  if (text == "Z") return Z();
  if (text == "Q") return Q();
  if (text == "N") return N();
  auto all_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  if (text.starts_with("Z[1/") && text.ends_with("]")) {
    std::string_view digits = text.substr(4, text.size() - 5);
    if (!all_digits(digits)) fail();
    return localization(BigInt(std::string(digits)));
  }
  if (text.ends_with("*Z")) {
    std::string_view literal = text.substr(0, text.size() - 2);
    std::string_view digits = literal.starts_with("-") ? literal.substr(1) : literal;
    if (!all_digits(digits)) fail();
    return cZ(BigInt(std::string(literal)));
  }
  fail();
}

std::string RingSpec::str() const {
  switch (kind_) {
    case RingKind::integers: return "Z";
    case RingKind::rationals: return "Q";
    case RingKind::naturals: return "N";
    case RingKind::c_multiples: return param_.str() + "*Z";
    case RingKind::localization: return "Z[1/" + param_.str() + "]";
  }
  return "?";
}

bool contains(const RingSpec& ring, const Rational& r) {
  switch (ring.kind()) {
    case RingKind::integers:
      return r.is_integer();
    case RingKind::c_multiples:
      return r.is_integer() && r.hat() % ring.parameter() == 0;
    case RingKind::localization: {
      // Every prime factor of the reduced denominator must divide m.
      BigInt rest = r.bar();
      for (;;) {
        BigInt g = big_gcd(rest, ring.parameter());
        if (g == 1) break;
        while (rest % g == 0) rest /= g;
      }
      return rest == 1;
    }
    case RingKind::rationals:
      return true;
    case RingKind::naturals:
      return r.is_integer() && r.hat() >= 0;
  }
  return false;
}

NonzeroInteger find_nonzero_integer(const RingSpec& ring, FindMode mode) {
  if (!ring.is_subring()) {
    throw ValidationError("find_nonzero_integer needs a subring model, not N");
  }
  if (mode == FindMode::direct) {
    switch (ring.kind()) {
      case RingKind::integers:
      case RingKind::localization:
      case RingKind::rationals:
        return NonzeroInteger{1, std::nullopt};
      case RingKind::c_multiples:
        return NonzeroInteger{ring.parameter(), std::nullopt};
      default:
        break;
    }
    throw ValidationError("unsupported ring variant");
  }
  // Constructive scan: the first ring-enumeration value that is a non-zero
  // integer. Terminates for every supported variant, since each contains a
  // non-zero integer and the enumeration is surjective.
  for (std::uint64_t i = 0;; ++i) {
    Rational candidate = enumerate_element(ring, BigInt(i));
    if (!candidate.is_zero() && candidate.is_integer()) {
      return NonzeroInteger{candidate.hat(), i};
    }
  }
}

Rational enumerate_element(const RingSpec& ring, const BigInt& k) {
  return project(decode_tuple(k, 1), ring)[0];
}

}  // namespace h10
