#include "h10/foursquare.hpp"

#include "h10/errors.hpp"

namespace h10 {

// Ascending scan over (t1, t2, t3) with t4 forced; the first hit is the
// lexicographically smallest non-increasing tuple. t1 starts at
// ceil(sqrt(n/4)) since the largest square must carry at least a quarter
// of n.
FourSquareWitness four_squares(const BigInt& n) {
  if (n < 0) {
    throw ValidationError("four_squares needs n >= 0");
  }
  if (n == 0) {
    return FourSquareWitness{0, 0, 0, 0};
  }
  BigInt t1 = big_isqrt((n + 3) / 4);
  if (4 * t1 * t1 < n) ++t1;
  const BigInt t1_max = big_isqrt(n);
  for (; t1 <= t1_max; ++t1) {
    const BigInt rem1 = n - t1 * t1;
    BigInt t2 = big_isqrt((rem1 + 2) / 3);
    if (3 * t2 * t2 < rem1) ++t2;
    BigInt t2_max = big_isqrt(rem1);
    if (t2_max > t1) t2_max = t1;
    for (; t2 <= t2_max; ++t2) {
      const BigInt rem2 = rem1 - t2 * t2;
      BigInt t3 = big_isqrt((rem2 + 1) / 2);
      if (2 * t3 * t3 < rem2) ++t3;
      BigInt t3_max = big_isqrt(rem2);
      if (t3_max > t2) t3_max = t2;
      for (; t3 <= t3_max; ++t3) {
        const BigInt rem3 = rem2 - t3 * t3;
        const BigInt t4 = big_isqrt(rem3);
        if (t4 * t4 == rem3 && t4 <= t3) {
          return FourSquareWitness{t1, t2, t3, t4};
        }
      }
    }
  }
  // Unreachable: every non-negative integer is a sum of four squares.
  throw Error("four_squares: search space exhausted");
}

}  // namespace h10
