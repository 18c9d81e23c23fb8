#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "h10/gadgets.hpp"

namespace h10 {

struct OracleAnswer {
  bool solvable = false;
  // Certifying solution for solvable answers, when the oracle has one.
  std::optional<QTuple> witness;
};

// Answers "is eq = 0 solvable in ring^n outside the excluded finite set".
class Oracle {
 public:
  virtual ~Oracle() = default;

  // Throws OracleError when the question is outside the oracle's competence.
  virtual OracleAnswer answer(const Equation& eq, const RingSpec& ring,
                              std::span<const QTuple> excluded) const = 0;

  virtual std::string kind() const = 0;
};

// Table oracle: bound to one equation and ring, with the exact solution set
// stored (or declared infinite). Solvable iff some stored solution avoids
// the excluded set; an infinite set always does. Construction validates
// every stored tuple (evaluates to zero, components in the ring) and throws
// ValidationError otherwise.
std::unique_ptr<Oracle> make_table_oracle(Equation eq, RingSpec ring,
                                          std::vector<QTuple> solutions,
                                          bool infinite = false);

// Exact for a*x1 + b = 0 at arity 1: solvable outside E iff a != 0 and
// -b/a is a ring member not in E, or a = b = 0 (every ring here is
// infinite, so a finite E never swallows it). Anything else is refused.
std::unique_ptr<Oracle> make_univariate_linear_oracle();

// Scans surjection(ring, n, i) for i < bound. Solvable answers carry the
// witness found; unsolvable answers are heuristic and only admissible where
// a witness-size bound is known in advance.
std::unique_ptr<Oracle> make_bounded_search_oracle(std::uint64_t bound);

// Total map i -> canonical equation, with a description of the equation
// universe the list is declared complete for. Soundness of "unsolvable"
// verdicts rests on that declaration.
struct FiniteListEnumerator {
  std::string declared_complete_for;
  std::function<Equation(std::uint64_t)> at;
};

// Cycles through the given items to make the mapping total.
// Throws ValidationError on an empty list.
FiniteListEnumerator make_cycling_list(std::string declared_complete_for,
                                       std::vector<Equation> items);

enum class Verdict { finite, solvable, unsolvable };

struct Halted {
  Verdict verdict = Verdict::finite;
  // Halt index: k of the last query (finite), i of the witness (solvable)
  // or of the list match (unsolvable).
  std::uint64_t index = 0;
  std::optional<Assignment> witness;  // solvable: re-evaluates to 0
  std::vector<QTuple> excluded;       // finite: theta(0..k), covers all solutions
  std::optional<Equation> matched;    // unsolvable: the list entry matched
};

struct BudgetExhausted {
  std::uint64_t steps = 0;
  std::uint64_t last_index = 0;
};

using EngineOutcome = std::variant<Halted, BudgetExhausted>;

struct SearchHit {
  Assignment witness;
  std::uint64_t index = 0;
};

// Evaluates eq at surjection(ring, arity, i) for i = 0..budget-1 and returns
// the first zero found, or nothing when the budget runs out.
// Trace lines (one per step, tab-separated): eval <i> phi=<tuple> value=<r> <zero|nonzero>
std::optional<SearchHit> dovetail_search(const Equation& eq, const RingSpec& ring,
                                         std::uint64_t budget,
                                         std::ostream* trace = nullptr);

// Finite-solution-set semi-decider. For k = 0, 1, 2, ... asks the oracle
// whether eq is solvable outside {theta(0), ..., theta(k)} with theta the
// ring surjection (duplicates kept, the loop is index-driven). The first
// "unsolvable" answer halts with verdict finite: all solutions lie in the
// excluded finite set. Solvable answers grow k. The budget counts oracle
// queries. Requires a subring model and a non-zero integer m in the ring.
// Trace lines: query <k> D=<eq> excluded=<tuples> <solvable|unsolvable>
EngineOutcome semidecide_finite(const Equation& eq, const RingSpec& ring,
                                const Oracle& oracle, const BigInt& m,
                                std::uint64_t budget, std::ostream* trace = nullptr);

// Solvability decider against a list enumerating the equations with
// finitely many solutions. For i = 0, 1, 2, ...: first check whether
// phi(i) solves eq (halt solvable with the witness), then whether
// add_dummy(eq) canonically equals list(i) (halt unsolvable with the match).
// The budget counts indices.
// Trace lines: eval <i> phi=<tuple> value=<r> <zero|nonzero>
//              match <i> S=<eq> <match|nomatch>
EngineOutcome decide_solvability(const Equation& eq, const RingSpec& ring,
                                 const FiniteListEnumerator& list,
                                 std::uint64_t budget, std::ostream* trace = nullptr);

// Flattening adapter: the single avoidance equation whose solvability in
// R^{n+5} equals the structured query's answer. Used for demonstration and
// logging; the engines themselves pass the structured form.
Equation flatten_query(const Equation& eq, std::span<const QTuple> excluded,
                       const BigInt& m);

}  // namespace h10
