#include "h10/engines.hpp"

#include <algorithm>
#include <ostream>

#include "h10/codec.hpp"
#include "h10/errors.hpp"
#include "h10/parser.hpp"

namespace h10 {

namespace {

bool tuple_in(std::span<const QTuple> haystack, const QTuple& needle) {
  return std::find(haystack.begin(), haystack.end(), needle) != haystack.end();
}

std::string render_tuple_list(std::span<const QTuple> tuples) {
  std::string out = "[";
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (i) out += ", ";
    out += render_tuple(tuples[i]);
  }
  out += "]";
  return out;
}

void require_budget(std::uint64_t budget) {
  if (budget == 0) {
    throw ValidationError("budget must be a positive integer");
  }
}

class TableOracle final : public Oracle {
 public:
  TableOracle(Equation eq, RingSpec ring, std::vector<QTuple> solutions, bool infinite)
      : eq_(std::move(eq)), ring_(std::move(ring)), solutions_(std::move(solutions)),
        infinite_(infinite) {
    for (const QTuple& solution : solutions_) {
      if (solution.size() != eq_.arity) {
        throw ValidationError("table oracle: solution arity mismatch at " +
                              render_tuple(solution));
      }
      if (!eq_.evaluate(solution).is_zero()) {
        throw ValidationError("table oracle: listed tuple " + render_tuple(solution) +
                              " is not a solution of " + render_equation(eq_));
      }
      for (const Rational& component : solution) {
        if (!contains(ring_, component)) {
          throw ValidationError("table oracle: listed tuple " + render_tuple(solution) +
                                " is not in " + ring_.str() + "^n");
        }
      }
    }
  }

  OracleAnswer answer(const Equation& eq, const RingSpec& ring,
                      std::span<const QTuple> excluded) const override {
    if (!eq_canonical_equal(eq, eq_) || !(ring == ring_)) {
      throw OracleError("table oracle only answers for " + render_equation(eq_) +
                        " over " + ring_.str());
    }
    if (infinite_) {
      // An infinite solution set always escapes a finite excluded set.
      return OracleAnswer{true, std::nullopt};
    }
    for (const QTuple& solution : solutions_) {
      if (!tuple_in(excluded, solution)) {
        return OracleAnswer{true, solution};
      }
    }
    return OracleAnswer{false, std::nullopt};
  }

  std::string kind() const override { return "table"; }

 private:
  Equation eq_;
  RingSpec ring_;
  std::vector<QTuple> solutions_;
  bool infinite_;
};

class UnivariateLinearOracle final : public Oracle {
 public:
  OracleAnswer answer(const Equation& eq, const RingSpec& ring,
                      std::span<const QTuple> excluded) const override {
    if (eq.arity != 1 || eq.lhs.degree() > 1) {
      throw OracleError("univariate-linear oracle needs a*x1 + b = 0 at arity 1");
    }
    const BigInt a = eq.lhs.coefficient(Monomial::variable(1));
    const BigInt b = eq.lhs.coefficient(Monomial{});
    if (a == 0) {
      // Either no solutions at all or all of the (infinite) ring.
      return OracleAnswer{b == 0, std::nullopt};
    }
    const Rational root{-b, a};
    if (contains(ring, root) && !tuple_in(excluded, QTuple{root})) {
      return OracleAnswer{true, QTuple{root}};
    }
    return OracleAnswer{false, std::nullopt};
  }

  std::string kind() const override { return "univariate-linear"; }
};

class BoundedSearchOracle final : public Oracle {
 public:
  explicit BoundedSearchOracle(std::uint64_t bound) : bound_(bound) {
    require_budget(bound);
  }

  OracleAnswer answer(const Equation& eq, const RingSpec& ring,
                      std::span<const QTuple> excluded) const override {
    for (std::uint64_t i = 0; i < bound_; ++i) {
      QTuple candidate = surjection(ring, eq.arity, BigInt(i));
      if (tuple_in(excluded, candidate)) continue;
      if (eq.evaluate(candidate).is_zero()) {
        return OracleAnswer{true, candidate};
      }
    }
    // Heuristic: nothing within the bound.
    return OracleAnswer{false, std::nullopt};
  }

  std::string kind() const override { return "bounded-search"; }

 private:
  std::uint64_t bound_;
};

}  // namespace

std::unique_ptr<Oracle> make_table_oracle(Equation eq, RingSpec ring,
                                          std::vector<QTuple> solutions, bool infinite) {
  return std::make_unique<TableOracle>(std::move(eq), std::move(ring),
                                       std::move(solutions), infinite);
}

std::unique_ptr<Oracle> make_univariate_linear_oracle() {
  return std::make_unique<UnivariateLinearOracle>();
}

std::unique_ptr<Oracle> make_bounded_search_oracle(std::uint64_t bound) {
  return std::make_unique<BoundedSearchOracle>(bound);
}

FiniteListEnumerator make_cycling_list(std::string declared_complete_for,
                                       std::vector<Equation> items) {
  if (items.empty()) {
    throw ValidationError("a finite-list enumerator needs at least one equation");
  }
  auto shared = std::make_shared<std::vector<Equation>>(std::move(items));
  return FiniteListEnumerator{
      std::move(declared_complete_for),
      [shared](std::uint64_t i) { return (*shared)[i % shared->size()]; }};
}

std::optional<SearchHit> dovetail_search(const Equation& eq, const RingSpec& ring,
                                         std::uint64_t budget, std::ostream* trace) {
  require_budget(budget);
  for (std::uint64_t i = 0; i < budget; ++i) {
    QTuple candidate = surjection(ring, eq.arity, BigInt(i));
    Rational value = eq.evaluate(candidate);
    if (trace) {
      *trace << "eval\t" << i << "\tphi=" << render_tuple(candidate)
             << " value=" << value.str() << "\t" << (value.is_zero() ? "zero" : "nonzero")
             << "\n";
    }
    if (value.is_zero()) {
      return SearchHit{candidate, i};
    }
  }
  return std::nullopt;
}

EngineOutcome semidecide_finite(const Equation& eq, const RingSpec& ring,
                                const Oracle& oracle, const BigInt& m,
                                std::uint64_t budget, std::ostream* trace) {
  require_budget(budget);
  if (!ring.is_subring()) {
    throw ValidationError("semidecide_finite needs a subring model, not N");
  }
  if (m == 0 || !contains(ring, Rational{m})) {
    throw ValidationError("semidecide_finite needs a non-zero integer m in the ring");
  }
  std::vector<QTuple> excluded;  // theta(0..k), duplicates kept
  for (std::uint64_t k = 0; k < budget; ++k) {
    excluded.push_back(surjection(ring, eq.arity, BigInt(k)));
    OracleAnswer answer = oracle.answer(eq, ring, excluded);
    if (trace) {
      *trace << "query\t" << k << "\tD=" << render_equation(eq)
             << " excluded=" << render_tuple_list(excluded) << "\t"
             << (answer.solvable ? "solvable" : "unsolvable") << "\n";
    }
    if (!answer.solvable) {
      Halted halted;
      halted.verdict = Verdict::finite;
      halted.index = k;
      halted.excluded = excluded;
      return halted;
    }
  }
  return BudgetExhausted{budget, budget - 1};
}

EngineOutcome decide_solvability(const Equation& eq, const RingSpec& ring,
                                 const FiniteListEnumerator& list,
                                 std::uint64_t budget, std::ostream* trace) {
  require_budget(budget);
  const Equation dummy = add_dummy(eq);
  for (std::uint64_t i = 0; i < budget; ++i) {
    QTuple candidate = surjection(ring, eq.arity, BigInt(i));
    Rational value = eq.evaluate(candidate);
    if (trace) {
      *trace << "eval\t" << i << "\tphi=" << render_tuple(candidate)
             << " value=" << value.str() << "\t" << (value.is_zero() ? "zero" : "nonzero")
             << "\n";
    }
    if (value.is_zero()) {
      Halted halted;
      halted.verdict = Verdict::solvable;
      halted.index = i;
      halted.witness = candidate;
      return halted;
    }
    Equation listed = list.at(i);
    const bool matched = eq_canonical_equal(dummy, listed);
    if (trace) {
      *trace << "match\t" << i << "\tS=" << render_equation(listed) << "\t"
             << (matched ? "match" : "nomatch") << "\n";
    }
    if (matched) {
      Halted halted;
      halted.verdict = Verdict::unsolvable;
      halted.index = i;
      halted.matched = listed;
      return halted;
    }
  }
  return BudgetExhausted{budget, budget - 1};
}

Equation flatten_query(const Equation& eq, std::span<const QTuple> excluded,
                       const BigInt& m) {
  return avoidance_equation(eq, std::vector<QTuple>(excluded.begin(), excluded.end()), m);
}

}  // namespace h10
