#include "h10/poly.hpp"

#include <algorithm>
#include <sstream>

#include "h10/errors.hpp"

namespace h10 {

Monomial::Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial Monomial::variable(unsigned index, unsigned exponent) {
  if (index == 0) {
    throw ArityError("variable indices are 1-based");
  }
  if (exponent == 0) return Monomial{};
  std::vector<unsigned> exps(index, 0);
  exps[index - 1] = exponent;
  return Monomial(std::move(exps));
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (unsigned e : exps_) d += e;
  return d;
}

unsigned Monomial::exponent(unsigned index) const {
  if (index == 0 || index > exps_.size()) return 0;
  return exps_[index - 1];
}

unsigned Monomial::max_index() const { return static_cast<unsigned>(exps_.size()); }

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<unsigned> exps(std::max(exps_.size(), other.exps_.size()), 0);
  for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] += exps_[i];
  for (std::size_t i = 0; i < other.exps_.size(); ++i) exps[i] += other.exps_[i];
  return Monomial(std::move(exps));
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  std::size_t width = std::max(a.exponents().size(), b.exponents().size());
  for (std::size_t i = 0; i < width; ++i) {
    unsigned ea = a.exponent(static_cast<unsigned>(i + 1));
    unsigned eb = b.exponent(static_cast<unsigned>(i + 1));
    if (ea != eb) return ea > eb;
  }
  return false;
}

Polynomial::Polynomial(unsigned arity) : arity_(arity) {
  if (arity == 0) {
    throw ArityError("polynomial arity must be >= 1");
  }
}

Polynomial Polynomial::constant(BigInt value, unsigned arity) {
  Polynomial p(arity);
  if (value != 0) p.terms_.emplace(Monomial{}, std::move(value));
  return p;
}

Polynomial Polynomial::variable(unsigned index, unsigned arity) {
  Polynomial p(arity);
  Monomial m = Monomial::variable(index);
  if (index > arity) {
    throw ArityError("variable index exceeds arity");
  }
  p.terms_.emplace(std::move(m), BigInt(1));
  return p;
}

Polynomial Polynomial::from_terms(std::span<const std::pair<BigInt, Monomial>> raw,
                                  unsigned arity) {
  Polynomial p(arity);
  for (const auto& [coefficient, monomial] : raw) {
    if (monomial.max_index() > arity) {
      throw ArityError("term uses variable index above arity");
    }
    auto [it, inserted] = p.terms_.emplace(monomial, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) p.terms_.erase(it);
    } else if (it->second == 0) {
      p.terms_.erase(it);
    }
  }
  return p;
}

unsigned Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

BigInt Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

Polynomial Polynomial::with_arity(unsigned arity) const {
  Polynomial p(arity);
  for (const auto& [monomial, _] : terms_) {
    if (monomial.max_index() > arity) {
      throw ArityError("arity below a used variable index");
    }
  }
  p.terms_ = terms_;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial p(std::max(arity_, other.arity_));
  p.terms_ = terms_;
  for (const auto& [monomial, coefficient] : other.terms_) {
    auto [it, inserted] = p.terms_.emplace(monomial, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) p.terms_.erase(it);
    }
  }
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(arity_);
  for (const auto& [monomial, coefficient] : terms_) {
    p.terms_.emplace(monomial, -coefficient);
  }
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial p(std::max(arity_, other.arity_));
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m = ma * mb;
      BigInt c = ca * cb;
      auto [it, inserted] = p.terms_.emplace(std::move(m), std::move(c));
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) p.terms_.erase(it);
      }
    }
  }
  return p;
}

Polynomial Polynomial::square() const { return *this * *this; }

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) {
    throw ArityError("evaluation point length does not match arity");
  }
  Rational total{0};
  for (const auto& [monomial, coefficient] : terms_) {
    Rational term{coefficient};
    const auto& exps = monomial.exponents();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] > 0) term = term * pow(point[i], exps[i]);
    }
    total = total + term;
  }
  return total;
}

Polynomial Polynomial::content_normalized() const {
  if (terms_.empty()) return *this;
  BigInt content = 0;
  for (const auto& [_, coefficient] : terms_) {
    content = big_gcd(content, big_abs(coefficient));
  }
  const bool flip = terms_.begin()->second < 0;
  Polynomial p(arity_);
  for (const auto& [monomial, coefficient] : terms_) {
    BigInt c = coefficient / content;
    p.terms_.emplace(monomial, flip ? -c : c);
  }
  return p;
}

namespace {

void render_monomial(std::ostringstream& out, const Monomial& m) {
  bool first = true;
  const auto& exps = m.exponents();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!first) out << "*";
    first = false;
    out << "x" << (i + 1);
    if (exps[i] > 1) out << "^" << exps[i];
  }
}

}  // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [monomial, coefficient] : terms_) {
    BigInt magnitude = big_abs(coefficient);
    if (first) {
      if (coefficient < 0) out << "-";
      first = false;
    } else {
      out << (coefficient < 0 ? " - " : " + ");
    }
    if (monomial.degree() == 0) {
      out << magnitude.str();
    } else {
      if (magnitude != 1) out << magnitude.str() << "*";
      render_monomial(out, monomial);
    }
  }
  return out.str();
}

Equation::Equation(Polynomial lhs_in, unsigned arity_in) : lhs(std::move(lhs_in)), arity(arity_in) {
  if (arity == 0) {
    throw ArityError("equation arity must be >= 1");
  }
  unsigned used = 0;
  for (const auto& [monomial, _] : lhs.terms()) {
    used = std::max(used, monomial.max_index());
  }
  if (arity < used) {
    throw ArityError("equation arity below a used variable index");
  }
  // Keep the ambient polynomial arity in step with the equation.
  if (lhs.arity() != arity) lhs = lhs.with_arity(arity);
}

Rational Equation::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity) {
    throw ArityError("assignment length does not match equation arity");
  }
  return lhs.evaluate(point);
}

bool eq_canonical_equal(const Equation& a, const Equation& b) {
  if (a.arity != b.arity) return false;
  return a.lhs.content_normalized().terms() == b.lhs.content_normalized().terms();
}

}  // namespace h10
