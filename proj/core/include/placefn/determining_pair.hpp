#ifndef PLACEFN_DETERMINING_PAIR_HPP
#define PLACEFN_DETERMINING_PAIR_HPP

#include <optional>
#include <string>
#include <vector>

#include "placefn/relations.hpp"
#include "placefn/representation.hpp"

namespace placefn {

// Symmetric transitive relation given by its disjoint classes; reflexive
// only on the union of the classes.
class PartialEquivalence {
 public:
  PartialEquivalence(CarrierPtr over, std::vector<std::vector<Elem>> classes);

  const CarrierPtr& over() const { return over_; }
  std::size_t class_count() const { return classes_.size(); }
  const std::vector<Elem>& class_members(std::size_t id) const { return classes_[id]; }
  const std::vector<std::vector<Elem>>& classes() const { return classes_; }

  std::optional<std::size_t> class_of(Elem x) const;
  bool in_domain(Elem x) const { return class_of(x).has_value(); }
  bool related(Elem x, Elem y) const;

 private:
  CarrierPtr over_;
  std::vector<std::vector<Elem>> classes_;    // members sorted, classes disjoint
  std::vector<std::optional<std::size_t>> class_of_;  // per element
};

// A selector-containing algebra extending a base algebra: the base embeds,
// selectors are disjoint from its image, base image plus selectors generate
// everything, and the selector laws g o_i e_i = e_i o_i g = g and
// e_k o_i g = e_k (k != i) hold.
struct UnitaryExtension {
  MultiSemigroup algebra;       // tables on the extension carrier
  std::vector<Elem> selectors;  // one per slot
  std::vector<Elem> embedding;  // base element -> extension element
};

// Throws NotUnitaryExtension on any violated condition.  The embedding must
// be injective except when a caller works with the image of a non-faithful
// assignment (decompose does).
void check_unitary_extension(const MultiSemigroup& base, const UnitaryExtension& ext,
                             bool require_injective_embedding = true);

struct DeterminingPair {
  UnitaryExtension extension;
  PartialEquivalence classes;   // E
  std::vector<Elem> exceptional;  // W, subset of the extension carrier (sorted)
};

struct AxiomVerdict {
  bool holds = true;
  std::string witness;  // empty when holds
};

struct DeterminingPairReport {
  // 1) base image and selectors lie in the relation's domain
  // 2) no selector is exceptional
  // 3) selector-class residual tuples fix every seed: g ~ g o chain
  // 4) classwise-equal residual tuples give equivalent composites
  // 5) W, when nonempty, is a class whose base part is an l-ideal
  AxiomVerdict axiom[5];
  std::string note = kSelectorSlotReading;

  bool all_pass() const {
    for (const AxiomVerdict& a : axiom)
      if (!a.holds) return false;
    return true;
  }
};

DeterminingPairReport validate_determining_pair(const MultiSemigroup& base,
                                                const DeterminingPair& dp,
                                                std::size_t cap = kDefaultStateCap);

// Indexed family of E-classes serving as the point set of the induced
// realization.  Unindexed points never occur in function graphs.
struct ClassIndexing {
  CarrierPtr points;
  std::vector<std::optional<std::size_t>> class_of;  // per point, E-class id

  std::optional<Elem> point_of(std::size_t class_id) const;
};

// Default indexing: one point per class that differs from W and meets the
// base image or the selectors, named after a member.
ClassIndexing default_indexing(const MultiSemigroup& base, const DeterminingPair& dp);

// The realization induced by a determining pair: point tuples are class
// tuples of reachable base-operand chain states (the all-selector state
// supplies the selector-class tuple), and the value class is the class of
// the chain result.  Conflicting witnesses raise InvalidPair.
Representation simplest_representation(const MultiSemigroup& base, const DeterminingPair& dp,
                                       const ClassIndexing& idx,
                                       std::size_t cap = kDefaultStateCap);

struct PointDecomposition {
  Tuple point;
  DeterminingPair pair;
  ClassIndexing indexing;
  Representation simplest;
  bool contained;  // simplest(g) included in the input function, every g
};

struct DecomposeResult {
  std::vector<PointDecomposition> family;
  std::vector<PlaceFunction> union_assignment;  // pointwise union over the family
  bool union_matches;                           // equals the input assignment exactly
  std::optional<Elem> mismatch;                 // first g where it differs
  UnitaryExtension extension;                   // shared by every pair
  std::vector<PlaceFunction> extension_functions;  // aligned with its carrier
};

// Splits a representation into the per-point-tuple family of simplest
// realizations it is the union of: extends the input to full functions plus
// one projector per slot, closes under composition, and reads one
// determining pair off every point tuple.
DecomposeResult decompose(const Representation& rep, std::size_t extension_cap = 100'000);

}  // namespace placefn

#endif  // PLACEFN_DETERMINING_PAIR_HPP
