#ifndef PLACEFN_QUASI_ORDER_HPP
#define PLACEFN_QUASI_ORDER_HPP

#include <optional>
#include <span>
#include <tuple>

#include "placefn/relations.hpp"
#include "placefn/representation.hpp"

namespace placefn {

// Domain-inclusion quasi-order: (g1, g2) when dom P(g1) is a subset of
// dom P(g2).  Reflexive and transitive by construction.
BinaryRelation chi_of(const Representation& r);

// Equality kernel: (g1, g2) when P(g1) = P(g2).  Diagonal exactly when the
// assignment is injective.
BinaryRelation epsilon_of(const Representation& r);

// Combination over pairwise disjoint point carriers.  With tag_points the
// members' points are relabeled "<k>:<name>" so disjointness always holds;
// without it the carriers must already be disjoint (CarriersNotDisjoint).
// chi and epsilon of the sum are the intersections of the members'.
Representation sum_representations(std::span<const Representation> members,
                                   bool tag_points = true);

// Pointwise graph union over one shared point carrier.  May fail to be
// single-valued, and even when single-valued need not satisfy the
// homomorphism law; both outcomes are data, not errors.
struct UnionOutcome {
  bool is_function = false;
  // g, point, existing value, conflicting value (when !is_function).
  std::optional<std::tuple<Elem, Tuple, Elem, Elem>> conflict;
  std::vector<PlaceFunction> assignment;  // when is_function
  bool is_representation = false;
  HomomorphismCheck hom{true};
};

UnionOutcome union_representations(std::span<const Representation> members);

// The four conditions an algebra with a candidate projection quasi-order
// must satisfy to be realizable with that chi.
struct ProjectionSystemReport {
  bool closed_condition;  // tuple determines action
  std::optional<Violation> violation;
  bool quasi_order;  // reflexive and transitive
  std::string quasi_order_witness;
  LRegularCheck l_regular;
  VNegativeCheck v_negative;

  bool all_pass() const {
    return closed_condition && quasi_order && l_regular.holds && v_negative.holds;
  }
};

ProjectionSystemReport check_projection_system(const MultiSemigroup& alg,
                                               const BinaryRelation& chi,
                                               std::size_t cap = kDefaultStateCap);

// One member of the realizing family: points are the chain states, and the
// function for g is defined at a state exactly when a is chi-below the
// state's result for g (the all-selector state's result being g itself).
Representation build_Pa(const MultiSemigroup& alg, const BinaryRelation& chi, Elem a,
                        std::size_t cap = kDefaultStateCap);

struct ProjectionRepresentation {
  Representation rep;
  BinaryRelation chi_rep;
  BinaryRelation epsilon_rep;
  bool chi_matches;  // chi_rep equals the requested chi
  bool faithful;     // epsilon_rep is the diagonal
};

// Faithful realization with a prescribed projection quasi-order: the sum of
// the totalized faithful realization (full functions, so its chi is total)
// with one build_Pa member per element.
ProjectionRepresentation build_projection_representation(const MultiSemigroup& alg,
                                                         const BinaryRelation& chi,
                                                         std::size_t cap = kDefaultStateCap);

}  // namespace placefn

#endif  // PLACEFN_QUASI_ORDER_HPP
