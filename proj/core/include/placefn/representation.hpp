#ifndef PLACEFN_REPRESENTATION_HPP
#define PLACEFN_REPRESENTATION_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "placefn/closure.hpp"
#include "placefn/mann.hpp"
#include "placefn/place_function.hpp"

namespace placefn {

// A map g -> n-place function over a point carrier satisfying
// P(g1 o_i g2) = P(g1) o_i P(g2) for every pair and position.
class Representation {
 public:
  Representation(MultiSemigroup algebra, CarrierPtr points, std::vector<PlaceFunction> assignment);

  const MultiSemigroup& algebra() const { return algebra_; }
  const CarrierPtr& points() const { return points_; }
  const PlaceFunction& of(Elem g) const { return assignment_.at(g); }
  std::span<const PlaceFunction> assignment() const { return assignment_; }

  bool injective() const;

 private:
  MultiSemigroup algebra_;
  CarrierPtr points_;
  std::vector<PlaceFunction> assignment_;  // indexed by algebra element
};

struct HomomorphismCheck {
  bool ok;
  // First failing triple when !ok.
  Elem g1 = 0, g2 = 0;
  std::size_t pos = 0;
};

// Exhaustive check of P(g1 o_i g2) == P(g1) o_i P(g2) as function equality.
HomomorphismCheck verify_representation(const Representation& r);

// Selector names "e1".."en" (underscore-prefixed until fresh in `taken`).
std::vector<std::string> selector_names(std::size_t n, const std::vector<std::string>& taken);

// Fresh sentinel name, "c" by default.
std::string fresh_point_name(const std::vector<std::string>& taken, const std::string& base = "c");

// Faithful realization of a representable algebra.  Point carrier is
// G extended by one selector per slot; the function assigned to g is defined
// on the reachable chain states: seed value g at the all-selector tuple,
// the state's action value elsewhere.  Throws NotRepresentable otherwise.
Representation faithful_representation(const MultiSemigroup& alg,
                                       std::size_t cap = kDefaultStateCap);

// Same, reusing an already-computed automaton.
Representation faithful_representation(const ClosureAutomaton& automaton);

// Extend every assigned function to a full one over points + fresh sentinel:
// the sentinel value everywhere outside the original domain (including every
// tuple that mentions the sentinel).  Injectivity and the homomorphism law
// are preserved.
Representation totalize(const Representation& r);

// Least set of functions containing phi0 and the projectors and closed under
// all compositions, built by fixed-point iteration.  Inputs must be total
// functions on a common carrier; with total functions the projectors behave
// as selectors (g o_i I_i = I_i o_i g = g and I_k o_i g = I_k for k != i).
std::vector<PlaceFunction> unitary_extension(std::span<const PlaceFunction> phi0,
                                             std::size_t arity, CarrierPtr carrier,
                                             std::size_t cap = 100'000);

}  // namespace placefn

#endif  // PLACEFN_REPRESENTATION_HPP
