#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "h10/rational.hpp"

namespace h10 {

// Power product of variables x1, x2, ... Exponent vectors are stored with
// trailing zeros trimmed, so a monomial is independent of ambient arity.
class Monomial {
 public:
  Monomial() = default;  // the constant monomial, degree 0
  explicit Monomial(std::vector<unsigned> exponents);

  static Monomial variable(unsigned index, unsigned exponent = 1);  // index >= 1

  unsigned degree() const;
  // 1-based; 0 for any index beyond the stored exponents.
  unsigned exponent(unsigned index) const;
  // Largest variable index with a non-zero exponent; 0 for the constant.
  unsigned max_index() const;
  const std::vector<unsigned>& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<unsigned> exps_;
};

// Graded-lexicographic order with x1 > x2 > ...; "greater" so that maps
// iterate leading term first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using TermMap = std::map<Monomial, BigInt, GrlexGreater>;

// Canonical multivariate polynomial with integer coefficients: no zero
// coefficients stored, terms ordered graded-lex descending, every used
// variable index <= arity. Immutable value type.
class Polynomial {
 public:
  explicit Polynomial(unsigned arity = 1);  // the zero polynomial

  static Polynomial constant(BigInt value, unsigned arity = 1);
  static Polynomial variable(unsigned index, unsigned arity);

  // Merge like terms, drop zero coefficients, impose canonical order.
  // Throws ArityError when a term uses a variable index above arity.
  static Polynomial from_terms(std::span<const std::pair<BigInt, Monomial>> raw,
                               unsigned arity);

  unsigned arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;  // 0 for the zero polynomial
  const TermMap& terms() const { return terms_; }
  BigInt coefficient(const Monomial& m) const;

  // Same terms at a wider ambient arity (>= max used index).
  Polynomial with_arity(unsigned arity) const;

  // Arithmetic pads the narrower operand to the wider arity.
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial square() const;

  // Exact value at a rational point; point.size() must equal arity.
  Rational evaluate(std::span<const Rational> point) const;

  // Coefficient content divided out and leading (graded-lex greatest)
  // coefficient made positive. Zero stays zero.
  Polynomial content_normalized() const;

  // Graded-lex descending text form, e.g. "4*x1^2 - 4*x1 + 1"; "0" when zero.
  std::string str() const;

  bool operator==(const Polynomial& other) const {
    return arity_ == other.arity_ && terms_ == other.terms_;
  }

 private:
  TermMap terms_;
  unsigned arity_ = 1;
};

// lhs = 0 over tuples of length arity. The arity may strictly exceed every
// variable index occurring in lhs: appending an unused variable changes the
// solution set over an infinite ring from "none" to "none" and from "some"
// to "infinitely many", so the distinction must live here, not in the terms.
struct Equation {
  Polynomial lhs;
  unsigned arity = 1;

  Equation() = default;
  // Throws ArityError when arity < max variable index used by lhs (or < 1).
  Equation(Polynomial lhs, unsigned arity);

  // point.size() must equal arity; trailing components beyond lhs.arity()
  // are ignored by the value.
  Rational evaluate(std::span<const Rational> point) const;

  bool operator==(const Equation&) const = default;
};

// True iff arities agree and the two sides are identical after content
// normalization, i.e. equality up to a non-zero integer factor.
bool eq_canonical_equal(const Equation& a, const Equation& b);

}  // namespace h10
