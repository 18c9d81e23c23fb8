#pragma once

#include "h10/rational.hpp"
#include "h10/rings.hpp"

namespace h10 {

// The prime-exponent surjection N -> Q^n and its companions.
//
// decode_tuple reads, for each i = 1..n, the exponents (a, b, c) of the
// i-th prime triple (p_i, q_i, r_i) in the factorization of x+1 and forms
// component i = (-1)^a * b / (c+1). Primes outside the first n triples are
// ignored, so the map is total and cheap for any x.
QTuple decode_tuple(const BigInt& x, unsigned n);

// Right inverse of decode_tuple: the component s*a/b in lowest terms is
// packed as exponents (s<0 ? 1 : 0, a, b-1) — all three zero for a zero
// component — and x = prod p_i^.. q_i^.. r_i^.. - 1. Many x decode to the
// same tuple; this picks the lowest-terms representative.
BigInt encode_tuple(const QTuple& tuple);

// Identity when every component is in the target (a ring model or N);
// the all-zero tuple of the same length otherwise.
QTuple project(const QTuple& tuple, const RingSpec& target);

// Computable surjection N -> target^n.
// Subring targets: project(decode_tuple(i, n), target).
// N: the decoded tuple is first projected into N^n and each resulting
// natural is then used as an index into enumerate_element(N, .), i.e. the
// composition through the tau-presentation rather than the ring projection.
QTuple surjection(const RingSpec& target, unsigned n, const BigInt& i);

}  // namespace h10
