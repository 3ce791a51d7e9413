#include "placefn/mann.hpp"

namespace placefn {

namespace {

void check_compatible(const PlaceFunction& f, const PlaceFunction& g, const char* where) {
  if (f.arity() != g.arity()) fail(ErrorCode::arity_mismatch, where);
  if (!same_carrier(f.carrier(), g.carrier())) fail(ErrorCode::carrier_mismatch, where);
}

void check_pos(std::size_t pos, std::size_t arity, const char* where) {
  if (pos < 1 || pos > arity) fail(ErrorCode::position_out_of_range, where);
}

}  // namespace

PlaceFunction mann_compose(const PlaceFunction& f, const PlaceFunction& g, std::size_t pos) {
  check_compatible(f, g, "mann_compose");
  check_pos(pos, f.arity(), "mann_compose");
  std::map<Tuple, Elem> out;
  for (const auto& [t, gv] : g.entries()) {
    auto fv = f.at(t.with(pos - 1, gv));
    if (fv) out.emplace(t, *fv);
  }
  return PlaceFunction(f.arity(), f.carrier(), std::move(out));
}

PlaceFunction menger_superpose(const PlaceFunction& f, std::span<const PlaceFunction> gs) {
  const std::size_t n = f.arity();
  if (gs.size() != n) fail(ErrorCode::wrong_list_length, "menger_superpose needs n inner functions");
  for (const PlaceFunction& g : gs) check_compatible(f, g, "menger_superpose");

  std::map<Tuple, Elem> out;
  // Walk the smallest inner domain; every g must be defined at the tuple.
  std::size_t lead = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (gs[i].size() < gs[lead].size()) lead = i;
  for (const auto& [t, unused] : gs[lead].entries()) {
    Tuple image = Tuple::filled(n, 0);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      auto v = gs[i].at(t);
      if (!v) ok = false;
      else image.set(i, *v);
    }
    if (!ok) continue;
    auto fv = f.at(image);
    if (fv) out.emplace(t, *fv);
  }
  return PlaceFunction(n, f.carrier(), std::move(out));
}

PlaceFunction projector(std::size_t arity, std::size_t pos, CarrierPtr carrier) {
  check_pos(pos, arity, "projector");
  std::map<Tuple, Elem> out;
  for_each_tuple(carrier->size(), arity, [&](const Tuple& t) { out.emplace(t, t[pos - 1]); });
  return PlaceFunction(arity, std::move(carrier), std::move(out));
}

PlaceFunction compose_sequence(PlaceFunction f, std::span<const FnMove> seq) {
  for (const FnMove& m : seq) f = mann_compose(f, m.fn, m.pos);
  return f;
}

}  // namespace placefn
