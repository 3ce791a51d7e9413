#include "placefn/closure.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace placefn {

ClosureAutomaton::ClosureAutomaton(MultiSemigroup algebra, std::vector<StateRecord> states)
    : algebra_(std::move(algebra)), states_(std::move(states)) {
  index_.reserve(states_.size());
  for (std::uint32_t i = 0; i < states_.size(); ++i)
    index_.emplace_back(states_[i].tuple.packed(), i);
  std::sort(index_.begin(), index_.end());
}

std::optional<std::uint32_t> ClosureAutomaton::find(const MuTuple& t) const {
  auto it = std::lower_bound(index_.begin(), index_.end(),
                             std::make_pair(t.packed(), std::uint32_t(0)));
  if (it == index_.end() || it->first != t.packed()) return std::nullopt;
  return it->second;
}

MoveSeq ClosureAutomaton::witness_path(std::uint32_t s) const {
  MoveSeq path;
  while (states_[s].parent) {
    path.push_back(states_[s].parent->second);
    s = states_[s].parent->first;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

ClosureResult closure(const MultiSemigroup& alg, std::size_t cap) {
  const std::size_t n = alg.op_count();
  const std::size_t k = alg.size();

  std::vector<StateRecord> states;
  std::unordered_map<std::uint64_t, std::uint32_t> seen;
  seen.reserve(256);

  std::vector<Elem> identity(k);
  for (std::size_t g = 0; g < k; ++g) identity[g] = static_cast<Elem>(g);
  states.push_back(StateRecord{MuTuple::initial(n), identity, std::nullopt});
  seen.emplace(states[0].tuple.packed(), 0);

  auto path_of = [&](std::uint32_t s) {
    MoveSeq p;
    while (states[s].parent) {
      p.push_back(states[s].parent->second);
      s = states[s].parent->first;
    }
    std::reverse(p.begin(), p.end());
    return p;
  };

  for (std::uint32_t head = 0; head < states.size(); ++head) {
    for (std::size_t pos = 1; pos <= n; ++pos) {
      for (std::size_t y = 0; y < k; ++y) {
        const OpMove m{pos, static_cast<Elem>(y)};
        // Copy: states may reallocate on push_back below.
        const MuTuple next = mu_step(alg, states[head].tuple, m);
        std::vector<Elem> act(k);
        for (std::size_t g = 0; g < k; ++g)
          act[g] = alg.apply(pos, states[head].action[g], m.operand);

        auto it = seen.find(next.packed());
        if (it == seen.end()) {
          if (states.size() >= cap)
            fail(ErrorCode::cap_exceeded,
                 "closure state cap " + std::to_string(cap) + " exceeded");
          seen.emplace(next.packed(), static_cast<std::uint32_t>(states.size()));
          states.push_back(StateRecord{next, std::move(act), std::make_pair(head, m)});
          continue;
        }

        const StateRecord& old = states[it->second];
        if (old.action == act) continue;

        // Conflicting revisit: the tuple does not determine the action.
        Violation v;
        v.tuple = next;
        v.seq_u = path_of(it->second);
        v.seq_v = path_of(head);
        v.seq_v.push_back(m);
        Elem g = 0;
        while (old.action[g] == act[g]) ++g;
        v.g = g;
        v.left = old.action[g];
        v.right = act[g];
        // Self-check the witness against the definitional path.
        if (!(mu_star(alg, v.seq_u) == v.tuple && mu_star(alg, v.seq_v) == v.tuple &&
              eval_sequence(alg, v.g, v.seq_u) == v.left &&
              eval_sequence(alg, v.g, v.seq_v) == v.right && v.left != v.right))
          fail(ErrorCode::system_check_failed, "closure produced an unverifiable witness");
        return ClosureResult{std::nullopt, std::move(v)};
      }
    }
  }

  return ClosureResult{ClosureAutomaton(alg, std::move(states)), std::nullopt};
}

RepresentabilityResult is_representable(const MultiSemigroup& alg, std::size_t cap) {
  ClosureResult r = closure(alg, cap);
  return RepresentabilityResult{r.closed(), std::move(r.automaton), std::move(r.violation)};
}

std::vector<PairState> action_closure(const MultiSemigroup& alg,
                                      const ActionClosureOptions& opts) {
  const std::size_t n = alg.op_count();
  const std::size_t k = alg.size();

  std::vector<Elem> operands = opts.operands;
  std::vector<Elem> seeds = opts.seeds;
  if (operands.empty())
    for (std::size_t g = 0; g < k; ++g) operands.push_back(static_cast<Elem>(g));
  if (seeds.empty())
    for (std::size_t g = 0; g < k; ++g) seeds.push_back(static_cast<Elem>(g));
  for (Elem y : operands)
    if (y >= k) fail(ErrorCode::unknown_element, "action_closure operand");
  for (Elem g : seeds)
    if (g >= k) fail(ErrorCode::unknown_element, "action_closure seed");

  struct Rec {
    MuTuple tuple;
    std::vector<Elem> action;
  };
  std::vector<Rec> states;
  std::map<std::pair<std::uint64_t, std::vector<Elem>>, std::uint32_t> seen;

  states.push_back(Rec{MuTuple::initial(n), seeds});
  seen.emplace(std::make_pair(states[0].tuple.packed(), seeds), 0);

  for (std::uint32_t head = 0; head < states.size(); ++head) {
    for (std::size_t pos = 1; pos <= n; ++pos) {
      for (Elem y : operands) {
        const OpMove m{pos, y};
        const MuTuple next = mu_step(alg, states[head].tuple, m);
        std::vector<Elem> act(seeds.size());
        for (std::size_t g = 0; g < act.size(); ++g)
          act[g] = alg.apply(pos, states[head].action[g], y);
        auto key = std::make_pair(next.packed(), act);
        if (seen.count(key)) continue;
        if (states.size() >= opts.cap)
          fail(ErrorCode::cap_exceeded,
               "action closure cap " + std::to_string(opts.cap) + " exceeded");
        seen.emplace(std::move(key), static_cast<std::uint32_t>(states.size()));
        states.push_back(Rec{next, std::move(act)});
      }
    }
  }

  std::vector<PairState> out;
  out.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i)
    out.push_back(PairState{states[i].tuple, std::move(states[i].action), i == 0});
  return out;
}

std::vector<PairState> action_closure(const MultiSemigroup& alg, std::size_t cap) {
  ActionClosureOptions opts;
  opts.cap = cap;
  return action_closure(alg, opts);
}

}  // namespace placefn
