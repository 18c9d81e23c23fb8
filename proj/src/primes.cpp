#include "h10/primes.hpp"

#include <mutex>
#include <vector>

#include "h10/errors.hpp"

namespace h10 {

namespace {

std::mutex sieve_mutex;
std::vector<std::uint64_t> sieve_cache = {2, 3};

// Extends the cache by trial division against the primes already found.
void extend_to(std::size_t count) {
  while (sieve_cache.size() < count) {
    std::uint64_t candidate = sieve_cache.back() + 2;
    for (;; candidate += 2) {
      bool composite = false;
      for (std::uint64_t p : sieve_cache) {
        if (p * p > candidate) break;
        if (candidate % p == 0) {
          composite = true;
          break;
        }
      }
      if (!composite) break;
    }
    sieve_cache.push_back(candidate);
  }
}

}  // namespace

std::uint64_t nth_prime(std::size_t n) {
  if (n == 0) {
    throw ValidationError("prime indices are 1-based");
  }
  std::lock_guard<std::mutex> lock(sieve_mutex);
  extend_to(n);
  return sieve_cache[n - 1];
}

PrimeTriple prime_triple(std::uint64_t i) {
  if (i == 0) {
    throw ValidationError("prime triple indices are 1-based");
  }
  std::lock_guard<std::mutex> lock(sieve_mutex);
  extend_to(static_cast<std::size_t>(3 * i));
  return PrimeTriple{sieve_cache[3 * i - 3], sieve_cache[3 * i - 2], sieve_cache[3 * i - 1]};
}

unsigned multiplicity(std::uint64_t p, const BigInt& v) {
  if (p < 2 || v < 1) {
    throw ValidationError("multiplicity needs p >= 2 and v >= 1");
  }
  unsigned count = 0;
  BigInt rest = v;
  while (rest % p == 0) {
    rest /= p;
    ++count;
  }
  return count;
}

}  // namespace h10
