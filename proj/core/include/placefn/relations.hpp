#ifndef PLACEFN_RELATIONS_HPP
#define PLACEFN_RELATIONS_HPP

#include <optional>
#include <set>
#include <utility>

#include "placefn/closure.hpp"

namespace placefn {

class BinaryRelation {
 public:
  BinaryRelation(CarrierPtr over, std::set<std::pair<Elem, Elem>> pairs);

  static BinaryRelation full(CarrierPtr over);
  static BinaryRelation diagonal(CarrierPtr over);

  const CarrierPtr& over() const { return over_; }
  const std::set<std::pair<Elem, Elem>>& pairs() const { return pairs_; }
  bool contains(Elem x, Elem y) const { return pairs_.count({x, y}) != 0; }
  std::size_t size() const { return pairs_.size(); }

  bool reflexive() const;
  bool transitive() const;
  bool is_quasi_order() const { return reflexive() && transitive(); }

  BinaryRelation intersect(const BinaryRelation& other) const;

  bool operator==(const BinaryRelation& o) const;

 private:
  CarrierPtr over_;
  std::set<std::pair<Elem, Elem>> pairs_;
};

// Chain-level closure properties of a relation / subset on an algebra.
// Quantification over chains factors through the reachable (tuple, action)
// states of action_closure; chains here are nonempty and the initial state
// is skipped.  Where a chain state carries selector markers, the adopted
// reading is: marker slots must match on both sides of a premise and only
// element slots are tested against the relation (reports carry this note).
inline constexpr const char* kSelectorSlotReading =
    "selector slots matched exactly; relation tested on element slots only";

// Conclusion escapes W, so every slot residual escapes W (contrapositive
// scanned: a residual inside W forces the result inside W).
struct LIdealWitness {
  Elem g;
  MuTuple state;
  std::size_t slot;  // 1-based, residual in W
  Elem result;       // eval result outside W
};
struct LIdealCheck {
  bool holds;
  std::optional<LIdealWitness> witness;
};
LIdealCheck is_l_ideal(const std::set<Elem>& w, const MultiSemigroup& alg);

// Pointwise related residual tuples give related results.
struct VRegularWitness {
  Elem g;
  MuTuple state_u, state_v;
  Elem left, right;  // (left, right) not in rho
};
struct VRegularCheck {
  bool holds;
  std::optional<VRegularWitness> witness;
};
VRegularCheck is_v_regular(const BinaryRelation& rho, const MultiSemigroup& alg);

// (x, y) in rho implies (x o_i z, y o_i z) in rho.
struct LRegularWitness {
  Elem x, y, z;
  std::size_t pos;
  Elem left, right;
};
struct LRegularCheck {
  bool holds;
  std::optional<LRegularWitness> witness;
};
LRegularCheck is_l_regular(const BinaryRelation& rho, const MultiSemigroup& alg);

// Every composite is rho-below each of its residuals.
struct VNegativeWitness {
  Elem g;
  MuTuple state;
  std::size_t slot;
  Elem result, residual;
};
struct VNegativeCheck {
  bool holds;
  std::optional<VNegativeWitness> witness;
};
VNegativeCheck is_v_negative(const BinaryRelation& rho, const MultiSemigroup& alg);

}  // namespace placefn

#endif  // PLACEFN_RELATIONS_HPP
