#pragma once

#include "h10/bigint.hpp"

namespace h10 {

// Non-increasing sum-of-four-squares decomposition: t1 >= t2 >= t3 >= t4 >= 0.
struct FourSquareWitness {
  BigInt t1, t2, t3, t4;

  bool operator==(const FourSquareWitness&) const = default;
};

// The lexicographically smallest non-increasing (t1,t2,t3,t4) with
// t1^2 + t2^2 + t3^2 + t4^2 = n, found by bounded exhaustive search.
// Total on n >= 0; throws ValidationError for negative n.
FourSquareWitness four_squares(const BigInt& n);

}  // namespace h10
