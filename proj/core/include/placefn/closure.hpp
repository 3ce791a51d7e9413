#ifndef PLACEFN_CLOSURE_HPP
#define PLACEFN_CLOSURE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "placefn/mu.hpp"

namespace placefn {

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

// Reachable chain states of a finite algebra.
//
// Every composition chain is summarized by its MuTuple together with the
// action map g -> g o_{i1} y1 ... o_{is} ys it induces on seed elements.
// Appending one move updates both incrementally (mu_step for the tuple, one
// table application per seed for the action), so breadth-first search over
// the n*|G| possible moves enumerates every reachable summary.
//
// States are keyed by MuTuple alone: the algebra admits a faithful
// realization by partial n-place functions exactly when the tuple determines
// the action.  A revisit with a conflicting action is therefore a complete
// refutation, and the two chains it exhibits (rebuilt from parent pointers)
// are a checkable witness.  At most (|G|+1)^n tuples exist, so the search
// terminates.
//
// BFS order is fixed (queue order; moves by position, then operand id) to
// keep witnesses and reports reproducible.

struct StateRecord {
  MuTuple tuple;
  std::vector<Elem> action;                           // seed g -> result, size |G|
  std::optional<std::pair<std::uint32_t, OpMove>> parent;  // absent on the initial state
};

class ClosureAutomaton {
 public:
  ClosureAutomaton(MultiSemigroup algebra, std::vector<StateRecord> states);

  const MultiSemigroup& algebra() const { return algebra_; }
  std::span<const StateRecord> states() const { return states_; }
  std::size_t size() const { return states_.size(); }

  const StateRecord& initial() const { return states_.front(); }
  std::optional<std::uint32_t> find(const MuTuple& t) const;

  // Shortest chain reaching state s, rebuilt through parent pointers.
  MoveSeq witness_path(std::uint32_t s) const;

 private:
  MultiSemigroup algebra_;
  std::vector<StateRecord> states_;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> index_;  // sorted packed tuple -> state
};

// Two chains with equal MuTuples but different results from seed g.
struct Violation {
  Elem g;
  MoveSeq seq_u, seq_v;
  MuTuple tuple;
  Elem left, right;  // eval(g, seq_u) != eval(g, seq_v)
};

struct ClosureResult {
  std::optional<ClosureAutomaton> automaton;
  std::optional<Violation> violation;

  bool closed() const { return automaton.has_value(); }
};

ClosureResult closure(const MultiSemigroup& alg, std::size_t cap = kDefaultStateCap);

struct RepresentabilityResult {
  bool representable;
  std::optional<ClosureAutomaton> automaton;
  std::optional<Violation> violation;
};

// Tuple-determines-action criterion, decided by the closure search.
RepresentabilityResult is_representable(const MultiSemigroup& alg,
                                        std::size_t cap = kDefaultStateCap);

// (tuple, action) pair keyed closure.  Unlike `closure` this never fails:
// conflicting chains become distinct states.  Relation checks quantify over
// these pairs, which is exact regardless of representability.  The operand
// alphabet may be restricted (chains over a subset of the carrier), and the
// action map may be tracked for a subset of seeds only.
struct PairState {
  MuTuple tuple;
  std::vector<Elem> action;  // aligned with the seed list
  bool initial;
};

struct ActionClosureOptions {
  std::vector<Elem> operands;  // empty = whole carrier
  std::vector<Elem> seeds;     // empty = whole carrier
  std::size_t cap = kDefaultStateCap;
};

std::vector<PairState> action_closure(const MultiSemigroup& alg,
                                      const ActionClosureOptions& opts);

std::vector<PairState> action_closure(const MultiSemigroup& alg,
                                      std::size_t cap = kDefaultStateCap);

}  // namespace placefn

#endif  // PLACEFN_CLOSURE_HPP
