#include "placefn/place_function.hpp"

namespace placefn {

PlaceFunction::PlaceFunction(std::size_t arity, CarrierPtr carrier)
    : arity_(static_cast<std::uint8_t>(arity)), carrier_(std::move(carrier)) {
  if (arity == 0 || arity > kMaxArity) fail(ErrorCode::malformed_input, "arity must be in 1..8");
  if (!carrier_) fail(ErrorCode::malformed_input, "null carrier");
}

PlaceFunction::PlaceFunction(std::size_t arity, CarrierPtr carrier, std::map<Tuple, Elem> entries)
    : PlaceFunction(arity, std::move(carrier)) {
  entries_ = std::move(entries);
  check_entries();
}

void PlaceFunction::check_entries() const {
  for (const auto& [t, v] : entries_) {
    if (t.size() != arity_) fail(ErrorCode::malformed_tuple, "key tuple of wrong arity");
    for (std::size_t i = 0; i < t.size(); ++i)
      if (!carrier_->contains(t[i])) fail(ErrorCode::malformed_tuple, "tuple component outside carrier");
    if (!carrier_->contains(v)) fail(ErrorCode::malformed_input, "value outside carrier");
  }
}

std::optional<Elem> PlaceFunction::at(const Tuple& t) const {
  auto it = entries_.find(t);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool PlaceFunction::total() const {
  std::uint64_t want = 1;
  for (std::size_t i = 0; i < arity_; ++i) {
    want *= carrier_->size();
    if (want > (std::uint64_t(1) << 62)) fail(ErrorCode::too_large, "tuple space overflow");
  }
  return entries_.size() == want;
}

bool PlaceFunction::operator==(const PlaceFunction& other) const {
  return arity_ == other.arity_ && same_carrier(carrier_, other.carrier_) &&
         entries_ == other.entries_;
}

void check_tuple(const PlaceFunction& f, const Tuple& t) {
  if (t.size() != f.arity()) fail(ErrorCode::malformed_tuple, "tuple arity mismatch");
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!f.carrier()->contains(t[i])) fail(ErrorCode::malformed_tuple, "tuple component outside carrier");
}

std::set<Tuple> domain(const PlaceFunction& f) {
  std::set<Tuple> d;
  for (const auto& [t, v] : f.entries()) d.insert(t);
  return d;
}

bool includes(const PlaceFunction& f, const PlaceFunction& g) {
  if (f.arity() != g.arity()) fail(ErrorCode::arity_mismatch, "includes");
  if (!same_carrier(f.carrier(), g.carrier())) fail(ErrorCode::carrier_mismatch, "includes");
  for (const auto& [t, v] : f.entries()) {
    auto w = g.at(t);
    if (!w || *w != v) return false;
  }
  return true;
}

PlaceFunction restrict_to(const PlaceFunction& f, const std::set<Tuple>& keep) {
  std::map<Tuple, Elem> out;
  for (const Tuple& t : keep) {
    check_tuple(f, t);
    auto v = f.at(t);
    if (v) out.emplace(t, *v);
  }
  return PlaceFunction(f.arity(), f.carrier(), std::move(out));
}

std::optional<Elem> value_set(const PlaceFunction& f, const Tuple& t) {
  check_tuple(f, t);
  return f.at(t);
}

}  // namespace placefn
