#include "placefn/representation.hpp"

#include <algorithm>
#include <unordered_set>

namespace placefn {

Representation::Representation(MultiSemigroup algebra, CarrierPtr points,
                               std::vector<PlaceFunction> assignment)
    : algebra_(std::move(algebra)), points_(std::move(points)), assignment_(std::move(assignment)) {
  if (assignment_.size() != algebra_.size())
    fail(ErrorCode::wrong_list_length, "one function per algebra element");
  for (const PlaceFunction& f : assignment_) {
    if (f.arity() != algebra_.op_count())
      fail(ErrorCode::arity_mismatch, "function arity must match operation count");
    if (!same_carrier(f.carrier(), points_))
      fail(ErrorCode::carrier_mismatch, "assigned function over a different point carrier");
  }
}

bool Representation::injective() const {
  for (std::size_t i = 0; i < assignment_.size(); ++i)
    for (std::size_t j = i + 1; j < assignment_.size(); ++j)
      if (assignment_[i] == assignment_[j]) return false;
  return true;
}

HomomorphismCheck verify_representation(const Representation& r) {
  const MultiSemigroup& alg = r.algebra();
  for (std::size_t pos = 1; pos <= alg.op_count(); ++pos)
    for (std::size_t g1 = 0; g1 < alg.size(); ++g1)
      for (std::size_t g2 = 0; g2 < alg.size(); ++g2) {
        const Elem prod = alg.apply(pos, static_cast<Elem>(g1), static_cast<Elem>(g2));
        if (!(r.of(prod) == mann_compose(r.of(static_cast<Elem>(g1)),
                                         r.of(static_cast<Elem>(g2)), pos)))
          return HomomorphismCheck{false, static_cast<Elem>(g1), static_cast<Elem>(g2), pos};
      }
  return HomomorphismCheck{true};
}

std::vector<std::string> selector_names(std::size_t n, const std::vector<std::string>& taken) {
  std::unordered_set<std::string> used(taken.begin(), taken.end());
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) {
    std::string name = "e" + std::to_string(i);
    while (used.count(name)) name = "_" + name;
    used.insert(name);
    out.push_back(std::move(name));
  }
  return out;
}

std::string fresh_point_name(const std::vector<std::string>& taken, const std::string& base) {
  std::unordered_set<std::string> used(taken.begin(), taken.end());
  std::string name = base;
  while (used.count(name)) name = "_" + name;
  return name;
}

Representation faithful_representation(const ClosureAutomaton& automaton) {
  const MultiSemigroup& alg = automaton.algebra();
  const std::size_t n = alg.op_count();
  const std::size_t k = alg.size();

  std::vector<std::string> names = alg.carrier()->names();
  for (std::string& s : selector_names(n, names)) names.push_back(std::move(s));
  CarrierPtr points = make_carrier(std::move(names));

  // Slot i's marker is rendered as carrier element |G| + i.
  std::vector<Elem> marker_ids(n);
  for (std::size_t i = 0; i < n; ++i) marker_ids[i] = static_cast<Elem>(k + i);

  std::vector<PlaceFunction> assignment;
  assignment.reserve(k);
  for (std::size_t g = 0; g < k; ++g) {
    std::map<Tuple, Elem> entries;
    for (const StateRecord& s : automaton.states())
      entries.emplace(s.tuple.render(marker_ids), s.action[g]);
    assignment.emplace_back(n, points, std::move(entries));
  }
  return Representation(alg, points, std::move(assignment));
}

Representation faithful_representation(const MultiSemigroup& alg, std::size_t cap) {
  ClosureResult r = closure(alg, cap);
  if (!r.closed())
    fail(ErrorCode::not_representable, "algebra has no faithful realization by place functions");
  return faithful_representation(*r.automaton);
}

Representation totalize(const Representation& r) {
  std::vector<std::string> names = r.points()->names();
  names.push_back(fresh_point_name(names));
  CarrierPtr points = make_carrier(std::move(names));
  const Elem sentinel = static_cast<Elem>(points->size() - 1);
  const std::size_t n = r.algebra().op_count();

  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n; ++i) space *= points->size();
  if (space > 10'000'000) fail(ErrorCode::too_large, "totalized tuple space above 1e7");

  std::vector<PlaceFunction> assignment;
  assignment.reserve(r.algebra().size());
  for (const PlaceFunction& f : r.assignment()) {
    std::map<Tuple, Elem> entries;
    for_each_tuple(points->size(), n, [&](const Tuple& t) {
      bool in_old = true;
      for (std::size_t i = 0; i < n; ++i)
        if (t[i] == sentinel) { in_old = false; break; }
      if (in_old) {
        auto v = f.at(t);
        entries.emplace(t, v ? *v : sentinel);
      } else {
        entries.emplace(t, sentinel);
      }
    });
    assignment.emplace_back(n, points, std::move(entries));
  }
  return Representation(r.algebra(), points, std::move(assignment));
}

std::vector<PlaceFunction> unitary_extension(std::span<const PlaceFunction> phi0,
                                             std::size_t arity, CarrierPtr carrier,
                                             std::size_t cap) {
  for (const PlaceFunction& f : phi0) {
    if (f.arity() != arity || !same_carrier(f.carrier(), carrier))
      fail(ErrorCode::carrier_mismatch, "unitary_extension inputs must share arity and carrier");
    if (!f.total()) fail(ErrorCode::malformed_input, "unitary_extension needs total functions");
  }

  std::vector<PlaceFunction> closed;
  auto add = [&](PlaceFunction f) -> bool {
    if (std::find(closed.begin(), closed.end(), f) != closed.end()) return false;
    if (closed.size() >= cap)
      fail(ErrorCode::cap_exceeded, "extension cap " + std::to_string(cap) + " exceeded");
    closed.push_back(std::move(f));
    return true;
  };

  for (std::size_t i = 1; i <= arity; ++i) add(projector(arity, i, carrier));
  for (const PlaceFunction& f : phi0) add(f);

  // Worklist over freshly added members; compose with everything seen so far.
  for (std::size_t w = 0; w < closed.size(); ++w) {
    for (std::size_t j = 0; j <= w; ++j) {
      for (std::size_t pos = 1; pos <= arity; ++pos) {
        add(mann_compose(closed[w], closed[j], pos));
        if (j != w) add(mann_compose(closed[j], closed[w], pos));
      }
    }
  }
  return closed;
}

}  // namespace placefn
