#pragma once

#include <optional>
#include <vector>

#include "h10/codec.hpp"
#include "h10/poly.hpp"

namespace h10 {

// Values for an equation's variables; length equals the equation's arity
// (or the documented sub-block of it for witness_nonzero).
using Assignment = std::vector<Rational>;

// Same left side, arity + 1. Over an infinite ring this turns "unsolvable"
// into "at most finitely many solutions" and "solvable" into "infinitely
// many".
Equation add_dummy(const Equation& eq);

// The four-square non-zero test: x1*x2 - m^2 - x3^2 - x4^2 - x5^2 - x6^2 = 0
// at arity 6, with x1 playing b and x2 playing y. Solvable in a subring R
// containing m exactly at the b in R \ {0}. Throws ValidationError for m = 0.
Equation build_nonzero_equation(const BigInt& m);

// Constructive side of the non-zero test: for b != 0 returns (y, y1..y4)
// with y = m^2*q for b = p/q (p > 0, sign pushed into q), and y_i = m*t_i
// from the four-square decomposition of (y*b - m^2)/m^2. All five components
// are ring members and zero the gadget equation together with b. For b = 0
// returns nothing (every assignment leaves the left side <= -m^2).
// Preconditions (checked): b in ring, m a non-zero integer, m in ring,
// ring a subring model.
std::optional<Assignment> witness_nonzero(const Rational& b, const BigInt& m,
                                          const RingSpec& ring);

// prod over distinct points of sum_i (x_i * bar(r_i) - hat(r_i))^2, expanded
// to canonical form; the empty set gives the constant 1. Vanishes exactly on
// the given points. All points must have length n.
Polynomial exclusion_product(const std::vector<QTuple>& points, unsigned n);

// One equation over arity n+5 that is solvable in R^{n+5} iff eq (arity n)
// has a solution in R^n outside the given points:
//   D(x)^2 + (x_{n+1} * P(x) - m^2 - x_{n+2}^2 - .. - x_{n+5}^2)^2 = 0
// with P the exclusion product. A sum of two squares vanishes over R
// (a subset of Q) iff both do, which forces D(x) = 0 and P(x) != 0.
Equation avoidance_equation(const Equation& eq, const std::vector<QTuple>& points,
                            const BigInt& m);

}  // namespace h10
