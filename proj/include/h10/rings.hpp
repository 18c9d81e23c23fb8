#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "h10/rational.hpp"

namespace h10 {

enum class RingKind {
  integers,     // Z
  c_multiples,  // cZ, c a non-zero integer (a subring without 1 when |c| > 1)
  localization, // Z[1/m], m >= 2: denominators whose prime factors divide m
  rationals,    // Q
  naturals,     // N; not a ring, admitted only where a tau-presented
                // infinite subset of Q is all that is required
};

// Model of a subring of Q (or of N) with decidable membership and a
// computable enumeration. Immutable value.
class RingSpec {
 public:
  static RingSpec Z();
  static RingSpec cZ(BigInt c);           // c != 0
  static RingSpec localization(BigInt m); // m >= 2
  static RingSpec Q();
  static RingSpec N();

  // "Z" | "Q" | "N" | "Z[1/m]" | "c*Z". Throws ValidationError otherwise.
  static RingSpec parse(std::string_view text);

  RingKind kind() const { return kind_; }
  // c for c_multiples, m for localization.
  const BigInt& parameter() const { return param_; }
  bool is_subring() const { return kind_ != RingKind::naturals; }
  std::string str() const;

  bool operator==(const RingSpec&) const = default;

 private:
  RingSpec(RingKind kind, BigInt param) : kind_(kind), param_(std::move(param)) {}

  RingKind kind_;
  BigInt param_;
};

// Exact decidable membership.
bool contains(const RingSpec& ring, const Rational& r);

enum class FindMode { direct, constructive };

struct NonzeroInteger {
  BigInt value;
  // Enumeration index where the constructive scan stopped; empty in
  // direct mode.
  std::optional<std::uint64_t> index;
};

// A non-zero integer member of the ring. Direct mode reads it off the ring
// model; constructive mode scans i = 0, 1, 2, ... and returns the first
// ring-enumeration value that is a non-zero integer. Throws ValidationError
// for N (not a ring).
NonzeroInteger find_nonzero_integer(const RingSpec& ring, FindMode mode);

// Total computable surjection N -> ring: the one-component decoding of k
// projected into the ring (sends non-members to 0; every ring element has
// a preimage index).
Rational enumerate_element(const RingSpec& ring, const BigInt& k);

}  // namespace h10
