#include "placefn/relations.hpp"

namespace placefn {

BinaryRelation::BinaryRelation(CarrierPtr over, std::set<std::pair<Elem, Elem>> pairs)
    : over_(std::move(over)), pairs_(std::move(pairs)) {
  if (!over_) fail(ErrorCode::malformed_input, "null carrier");
  for (const auto& [x, y] : pairs_)
    if (!over_->contains(x) || !over_->contains(y))
      fail(ErrorCode::unknown_element, "relation pair outside carrier");
}

BinaryRelation BinaryRelation::full(CarrierPtr over) {
  std::set<std::pair<Elem, Elem>> p;
  for (std::size_t x = 0; x < over->size(); ++x)
    for (std::size_t y = 0; y < over->size(); ++y)
      p.emplace(static_cast<Elem>(x), static_cast<Elem>(y));
  return BinaryRelation(std::move(over), std::move(p));
}

BinaryRelation BinaryRelation::diagonal(CarrierPtr over) {
  std::set<std::pair<Elem, Elem>> p;
  for (std::size_t x = 0; x < over->size(); ++x)
    p.emplace(static_cast<Elem>(x), static_cast<Elem>(x));
  return BinaryRelation(std::move(over), std::move(p));
}

bool BinaryRelation::reflexive() const {
  for (std::size_t x = 0; x < over_->size(); ++x)
    if (!contains(static_cast<Elem>(x), static_cast<Elem>(x))) return false;
  return true;
}

bool BinaryRelation::transitive() const {
  for (const auto& [x, y] : pairs_)
    for (const auto& [y2, z] : pairs_)
      if (y == y2 && !contains(x, z)) return false;
  return true;
}

BinaryRelation BinaryRelation::intersect(const BinaryRelation& other) const {
  if (!same_carrier(over_, other.over_)) fail(ErrorCode::carrier_mismatch, "intersect");
  std::set<std::pair<Elem, Elem>> p;
  for (const auto& xy : pairs_)
    if (other.pairs_.count(xy)) p.insert(xy);
  return BinaryRelation(over_, std::move(p));
}

bool BinaryRelation::operator==(const BinaryRelation& o) const {
  return same_carrier(over_, o.over_) && pairs_ == o.pairs_;
}

LIdealCheck is_l_ideal(const std::set<Elem>& w, const MultiSemigroup& alg) {
  if (w.empty()) fail(ErrorCode::empty_set, "l-ideal must be nonempty");
  for (Elem x : w)
    if (x >= alg.size()) fail(ErrorCode::unknown_element, "l-ideal member");

  for (const PairState& s : action_closure(alg)) {
    if (s.initial) continue;
    bool residual_in_w = false;
    std::size_t slot = 0;
    for (std::size_t i = 0; i < s.tuple.size(); ++i)
      if (!s.tuple.is_selector(i) && w.count(s.tuple.element(i))) {
        residual_in_w = true;
        slot = i + 1;
        break;
      }
    if (!residual_in_w) continue;
    for (std::size_t g = 0; g < alg.size(); ++g)
      if (!w.count(s.action[g]))
        return LIdealCheck{false,
                           LIdealWitness{static_cast<Elem>(g), s.tuple, slot, s.action[g]}};
  }
  return LIdealCheck{true, std::nullopt};
}

namespace {

bool same_marker_pattern(const MuTuple& a, const MuTuple& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.is_selector(i) != b.is_selector(i)) return false;
  return true;
}

}  // namespace

VRegularCheck is_v_regular(const BinaryRelation& rho, const MultiSemigroup& alg) {
  if (!same_carrier(rho.over(), alg.carrier()))
    fail(ErrorCode::carrier_mismatch, "is_v_regular");
  const auto states = action_closure(alg);
  for (const PairState& u : states) {
    if (u.initial) continue;
    for (const PairState& v : states) {
      if (v.initial) continue;
      if (!same_marker_pattern(u.tuple, v.tuple)) continue;
      bool premise = true;
      for (std::size_t i = 0; i < u.tuple.size() && premise; ++i)
        if (!u.tuple.is_selector(i) &&
            !rho.contains(u.tuple.element(i), v.tuple.element(i)))
          premise = false;
      if (!premise) continue;
      for (std::size_t g = 0; g < alg.size(); ++g)
        if (!rho.contains(u.action[g], v.action[g]))
          return VRegularCheck{false, VRegularWitness{static_cast<Elem>(g), u.tuple, v.tuple,
                                                      u.action[g], v.action[g]}};
    }
  }
  return VRegularCheck{true, std::nullopt};
}

LRegularCheck is_l_regular(const BinaryRelation& rho, const MultiSemigroup& alg) {
  if (!same_carrier(rho.over(), alg.carrier()))
    fail(ErrorCode::carrier_mismatch, "is_l_regular");
  for (const auto& [x, y] : rho.pairs())
    for (std::size_t z = 0; z < alg.size(); ++z)
      for (std::size_t pos = 1; pos <= alg.op_count(); ++pos) {
        const Elem xz = alg.apply(pos, x, static_cast<Elem>(z));
        const Elem yz = alg.apply(pos, y, static_cast<Elem>(z));
        if (!rho.contains(xz, yz))
          return LRegularCheck{false, LRegularWitness{x, y, static_cast<Elem>(z), pos, xz, yz}};
      }
  return LRegularCheck{true, std::nullopt};
}

VNegativeCheck is_v_negative(const BinaryRelation& rho, const MultiSemigroup& alg) {
  if (!same_carrier(rho.over(), alg.carrier()))
    fail(ErrorCode::carrier_mismatch, "is_v_negative");
  for (const PairState& s : action_closure(alg)) {
    if (s.initial) continue;
    for (std::size_t i = 0; i < s.tuple.size(); ++i) {
      if (s.tuple.is_selector(i)) continue;
      for (std::size_t g = 0; g < alg.size(); ++g)
        if (!rho.contains(s.action[g], s.tuple.element(i)))
          return VNegativeCheck{false, VNegativeWitness{static_cast<Elem>(g), s.tuple, i + 1,
                                                        s.action[g], s.tuple.element(i)}};
    }
  }
  return VNegativeCheck{true, std::nullopt};
}

}  // namespace placefn
