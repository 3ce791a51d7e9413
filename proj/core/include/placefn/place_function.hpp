#ifndef PLACEFN_PLACE_FUNCTION_HPP
#define PLACEFN_PLACE_FUNCTION_HPP

#include <map>
#include <optional>
#include <set>
#include <string>

#include "placefn/carrier.hpp"
#include "placefn/tuple.hpp"

namespace placefn {

// A partial map from n-tuples over a finite carrier to the carrier.
// Partiality is represented by absent keys only; there is no "undefined"
// sentinel value.  Immutable after construction.
class PlaceFunction {
 public:
  PlaceFunction(std::size_t arity, CarrierPtr carrier);
  PlaceFunction(std::size_t arity, CarrierPtr carrier, std::map<Tuple, Elem> entries);

  std::size_t arity() const { return arity_; }
  const CarrierPtr& carrier() const { return carrier_; }
  const std::map<Tuple, Elem>& entries() const { return entries_; }

  bool defined(const Tuple& t) const { return entries_.count(t) != 0; }
  std::optional<Elem> at(const Tuple& t) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Covers all |A|^n tuples.
  bool total() const;

  bool operator==(const PlaceFunction& other) const;

 private:
  void check_entries() const;

  std::uint8_t arity_;
  CarrierPtr carrier_;
  std::map<Tuple, Elem> entries_;
};

struct TotalityWitness {
  PlaceFunction function;
  bool is_total;
};

inline TotalityWitness totality(PlaceFunction f) {
  bool t = f.total();
  return TotalityWitness{std::move(f), t};
}

// Key set of the entries.
std::set<Tuple> domain(const PlaceFunction& f);

// f ⊆ g: domain(f) ⊆ domain(g) and the two agree on domain(f).
bool includes(const PlaceFunction& f, const PlaceFunction& g);

// Entries of f restricted to keys in `keep`.
PlaceFunction restrict_to(const PlaceFunction& f, const std::set<Tuple>& keep);

// {f(t)} if t is in the domain, otherwise the empty set.
std::optional<Elem> value_set(const PlaceFunction& f, const Tuple& t);

void check_tuple(const PlaceFunction& f, const Tuple& t);

}  // namespace placefn

#endif  // PLACEFN_PLACE_FUNCTION_HPP
