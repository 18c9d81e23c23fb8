#include "h10/gadgets.hpp"

#include <algorithm>

#include "h10/errors.hpp"
#include "h10/foursquare.hpp"

namespace h10 {

Equation add_dummy(const Equation& eq) { return Equation(eq.lhs, eq.arity + 1); }

Equation build_nonzero_equation(const BigInt& m) {
  if (m == 0) {
    throw ValidationError("the non-zero gadget needs m != 0");
  }
  const unsigned arity = 6;
  Polynomial lhs = Polynomial::variable(1, arity) * Polynomial::variable(2, arity) -
                   Polynomial::constant(m * m, arity);
  for (unsigned j = 3; j <= 6; ++j) {
    lhs = lhs - Polynomial::variable(j, arity).square();
  }
  return Equation(std::move(lhs), arity);
}

std::optional<Assignment> witness_nonzero(const Rational& b, const BigInt& m,
                                          const RingSpec& ring) {
  if (!ring.is_subring()) {
    throw ValidationError("witness_nonzero needs a subring model, not N");
  }
  if (m == 0) {
    throw ValidationError("witness_nonzero needs m != 0");
  }
  if (!contains(ring, Rational{m})) {
    throw ValidationError("m = " + m.str() + " is not a member of " + ring.str());
  }
  if (!contains(ring, b)) {
    throw ValidationError("b = " + b.str() + " is not a member of " + ring.str());
  }
  if (b.is_zero()) {
    return std::nullopt;  // left side stays <= -m^2 < 0
  }
  // b = p/q with p > 0; a negative b pushes the sign into q.
  BigInt p = b.hat();
  BigInt q = b.bar();
  if (p < 0) {
    p = -p;
    q = -q;
  }
  const Rational y{m * m * q};
  // y*b = m^2*p, so (y*b - m^2)/m^2 = p - 1 >= 0.
  FourSquareWitness t = four_squares(p - 1);
  return Assignment{y, Rational{m * t.t1}, Rational{m * t.t2}, Rational{m * t.t3},
                    Rational{m * t.t4}};
}

Polynomial exclusion_product(const std::vector<QTuple>& points, unsigned n) {
  if (n == 0) {
    throw ArityError("exclusion_product needs n >= 1");
  }
  for (const QTuple& point : points) {
    if (point.size() != n) {
      throw ArityError("exclusion point length does not match n");
    }
  }
  // Product over the point *set*: duplicates contribute one factor.
  std::vector<QTuple> distinct;
  for (const QTuple& point : points) {
    if (std::find(distinct.begin(), distinct.end(), point) == distinct.end()) {
      distinct.push_back(point);
    }
  }
  Polynomial product = Polynomial::constant(1, n);
  for (const QTuple& point : distinct) {
    Polynomial factor(n);
    for (unsigned i = 1; i <= n; ++i) {
      const Rational& r = point[i - 1];
      Polynomial diff = Polynomial::variable(i, n) * Polynomial::constant(r.bar(), n) -
                        Polynomial::constant(r.hat(), n);
      factor = factor + diff.square();
    }
    product = product * factor;
  }
  return product;
}

Equation avoidance_equation(const Equation& eq, const std::vector<QTuple>& points,
                            const BigInt& m) {
  if (m == 0) {
    throw ValidationError("avoidance_equation needs m != 0");
  }
  const unsigned n = eq.arity;
  const unsigned arity = n + 5;
  Polynomial exclusion = exclusion_product(points, n).with_arity(arity);
  Polynomial inner = Polynomial::variable(n + 1, arity) * exclusion -
                     Polynomial::constant(m * m, arity);
  for (unsigned j = 2; j <= 5; ++j) {
    inner = inner - Polynomial::variable(n + j, arity).square();
  }
  Polynomial lhs = eq.lhs.with_arity(arity).square() + inner.square();
  return Equation(std::move(lhs), arity);
}

}  // namespace h10
