#ifndef PLACEFN_MANN_HPP
#define PLACEFN_MANN_HPP

#include <span>
#include <vector>

#include "placefn/place_function.hpp"

namespace placefn {

// Compositions of n-place functions.  Positions are 1-based throughout.
//
//   (f o_i g)(a1..an) = f(a1, .., a(i-1), g(a1..an), a(i+1), .., an)
//   f[g1..gn](a1..an) = f(g1(a1..an), .., gn(a1..an))
//
// Both sides of each equation are defined or undefined simultaneously: a
// result entry exists exactly when every inner application is defined and
// the substituted tuple lies in the outer domain.

PlaceFunction mann_compose(const PlaceFunction& f, const PlaceFunction& g, std::size_t pos);

PlaceFunction menger_superpose(const PlaceFunction& f, std::span<const PlaceFunction> gs);

// The total function returning its pos-th argument.
PlaceFunction projector(std::size_t arity, std::size_t pos, CarrierPtr carrier);

// One step of a composition chain: substitute `fn` at slot `pos`.
struct FnMove {
  std::size_t pos;  // 1-based
  PlaceFunction fn;
};

// Left fold of mann_compose: f o_{i1} g1 o_{i2} g2 ... o_{ik} gk.
PlaceFunction compose_sequence(PlaceFunction f, std::span<const FnMove> seq);

}  // namespace placefn

#endif  // PLACEFN_MANN_HPP
