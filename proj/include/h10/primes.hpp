#pragma once

#include <cstddef>
#include <cstdint>

#include "h10/bigint.hpp"

namespace h10 {

// Consecutive primes partitioned into triples p_i < q_i < r_i:
// triple 1 = (2, 3, 5), triple 2 = (7, 11, 13), ...
struct PrimeTriple {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::uint64_t r = 0;

  bool operator==(const PrimeTriple&) const = default;
};

// 1-based: nth_prime(1) = 2. The sieve is incremental and grows on demand;
// the shared cache is mutex-guarded, so calls are thread-safe.
std::uint64_t nth_prime(std::size_t n);

// Triple i >= 1 holds the (3i-2)-th, (3i-1)-th and (3i)-th primes.
// Throws ValidationError for i = 0.
PrimeTriple prime_triple(std::uint64_t i);

// Exponent of the prime p in v; v >= 1.
unsigned multiplicity(std::uint64_t p, const BigInt& v);

}  // namespace h10
