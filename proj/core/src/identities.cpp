#include "placefn/identities.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace placefn {

std::string to_string(IdentityId id) {
  switch (id) {
    case IdentityId::eq4: return "EQ4";
    case IdentityId::eq5: return "EQ5";
    case IdentityId::eq6: return "EQ6";
    case IdentityId::eq7: return "EQ7";
    case IdentityId::eq8: return "EQ8";
    case IdentityId::eq9: return "EQ9";
    case IdentityId::eq10: return "EQ10";
    case IdentityId::eq11: return "EQ11";
    case IdentityId::eq12: return "EQ12";
    case IdentityId::eq13: return "EQ13";
  }
  return "?";
}

std::optional<IdentityId> identity_from_string(const std::string& s) {
  for (IdentityId id : all_identities())
    if (to_string(id) == s) return id;
  return std::nullopt;
}

std::span<const IdentityId> all_identities() {
  static const IdentityId ids[] = {IdentityId::eq4,  IdentityId::eq5,  IdentityId::eq6,
                                   IdentityId::eq7,  IdentityId::eq8,  IdentityId::eq9,
                                   IdentityId::eq10, IdentityId::eq11, IdentityId::eq12,
                                   IdentityId::eq13};
  return ids;
}

namespace {

std::string tuple_str(const Tuple& t, const Carrier& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += c.name(t[i]);
  }
  return s + ")";
}

// First point where the two sides disagree, or nullopt when equal.
std::optional<std::string> diff(const PlaceFunction& lhs, const PlaceFunction& rhs) {
  if (lhs == rhs) return std::nullopt;
  const Carrier& c = *lhs.carrier();
  for (const auto& [t, v] : lhs.entries()) {
    auto w = rhs.at(t);
    if (!w) return "lhs defined at " + tuple_str(t, c) + ", rhs undefined";
    if (*w != v)
      return "at " + tuple_str(t, c) + ": lhs=" + c.name(v) + " rhs=" + c.name(*w);
  }
  for (const auto& [t, v] : rhs.entries())
    if (!lhs.defined(t)) return "rhs defined at " + tuple_str(t, c) + ", lhs undefined";
  return "sides differ";
}

struct Ctx {
  std::span<const NamedFunction> samples;
  std::size_t arity;
  CarrierPtr carrier;
  std::vector<PlaceFunction> projectors;  // 1-based offset by -1
  std::uint64_t point_space;
};

using Instance = std::vector<std::size_t>;  // sample indices, one per slot

std::vector<std::string> instance_names(const Ctx& ctx, const Instance& inst) {
  std::vector<std::string> out;
  for (std::size_t i : inst) out.push_back(ctx.samples[i].name);
  return out;
}

// Per-identity slot counts (number of sampled functions in one instance).
std::size_t slot_count(IdentityId id, std::size_t n) {
  switch (id) {
    case IdentityId::eq4: return 1;
    case IdentityId::eq5: return n;
    case IdentityId::eq6: return 2;
    case IdentityId::eq7: return 1 + 2 * n;
    case IdentityId::eq8: return 2 + n;
    case IdentityId::eq9: return 2 + n;
    case IdentityId::eq10: return 1;
    case IdentityId::eq11: return 1;
    case IdentityId::eq12: return 0;  // chain-based, handled separately
    case IdentityId::eq13: return 0;
  }
  return 0;
}

// Evaluates one instance; returns mismatch detail or nullopt.
std::optional<std::string> check_instance(IdentityId id, const Ctx& ctx, const Instance& inst) {
  const std::size_t n = ctx.arity;
  auto S = [&](std::size_t slot) -> const PlaceFunction& { return ctx.samples[inst[slot]].fn; };

  switch (id) {
    case IdentityId::eq4: {
      const PlaceFunction& f = S(0);
      return diff(menger_superpose(f, ctx.projectors), f);
    }
    case IdentityId::eq5: {
      std::vector<PlaceFunction> gs;
      for (std::size_t i = 0; i < n; ++i) gs.push_back(S(i));
      std::set<Tuple> common = domain(gs[0]);
      for (std::size_t i = 1; i < n; ++i) {
        std::set<Tuple> next;
        for (const Tuple& t : common)
          if (gs[i].defined(t)) next.insert(t);
        common = std::move(next);
      }
      for (std::size_t i = 0; i < n; ++i) {
        auto d = diff(menger_superpose(ctx.projectors[i], gs), restrict_to(gs[i], common));
        if (d) return "i=" + std::to_string(i + 1) + ": " + *d;
      }
      return std::nullopt;
    }
    case IdentityId::eq6: {
      const PlaceFunction &f = S(0), &g = S(1);
      for (std::size_t i = 1; i <= n; ++i) {
        std::vector<PlaceFunction> inner = ctx.projectors;
        inner[i - 1] = g;
        auto d = diff(mann_compose(f, g, i), menger_superpose(f, inner));
        if (d) return "i=" + std::to_string(i) + ": " + *d;
      }
      return std::nullopt;
    }
    case IdentityId::eq7: {
      const PlaceFunction& f = S(0);
      std::vector<PlaceFunction> gs, hs;
      for (std::size_t i = 0; i < n; ++i) gs.push_back(S(1 + i));
      for (std::size_t i = 0; i < n; ++i) hs.push_back(S(1 + n + i));
      std::vector<PlaceFunction> gh;
      for (std::size_t i = 0; i < n; ++i) gh.push_back(menger_superpose(gs[i], hs));
      return diff(menger_superpose(menger_superpose(f, gs), hs), menger_superpose(f, gh));
    }
    case IdentityId::eq8: {
      const PlaceFunction &f = S(0), &g = S(1);
      std::vector<PlaceFunction> hs;
      for (std::size_t i = 0; i < n; ++i) hs.push_back(S(2 + i));
      const PlaceFunction gh = menger_superpose(g, hs);
      for (std::size_t i = 1; i <= n; ++i) {
        std::vector<PlaceFunction> inner = hs;
        inner[i - 1] = gh;
        auto d = diff(menger_superpose(mann_compose(f, g, i), hs), menger_superpose(f, inner));
        if (d) return "i=" + std::to_string(i) + ": " + *d;
      }
      return std::nullopt;
    }
    case IdentityId::eq9: {
      const PlaceFunction &f = S(0), &h = S(1);
      std::vector<PlaceFunction> gs;
      for (std::size_t i = 0; i < n; ++i) gs.push_back(S(2 + i));
      const PlaceFunction fg = menger_superpose(f, gs);
      for (std::size_t i = 1; i <= n; ++i) {
        std::vector<PlaceFunction> inner;
        for (std::size_t j = 0; j < n; ++j) inner.push_back(mann_compose(gs[j], h, i));
        auto d = diff(mann_compose(fg, h, i), menger_superpose(f, inner));
        if (d) return "i=" + std::to_string(i) + ": " + *d;
      }
      return std::nullopt;
    }
    case IdentityId::eq10: {
      const PlaceFunction& g = S(0);
      for (std::size_t i = 1; i <= n; ++i) {
        auto d = diff(mann_compose(g, ctx.projectors[i - 1], i), g);
        if (d) return "g o_i Ii, i=" + std::to_string(i) + ": " + *d;
        d = diff(mann_compose(ctx.projectors[i - 1], g, i), g);
        if (d) return "Ii o_i g, i=" + std::to_string(i) + ": " + *d;
      }
      return std::nullopt;
    }
    case IdentityId::eq11: {
      const PlaceFunction& g = S(0);
      const std::set<Tuple> dom_g = domain(g);
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t i = 1; i <= n; ++i) {
          if (k == i) continue;
          auto d = diff(mann_compose(ctx.projectors[k - 1], g, i),
                        restrict_to(ctx.projectors[k - 1], dom_g));
          if (d) return "k=" + std::to_string(k) + " i=" + std::to_string(i) + ": " + *d;
        }
      return std::nullopt;
    }
    default:
      fail(ErrorCode::unknown_identity, "not instance-based");
  }
}

// f o_{i1} g1 ... = f[(I1 o_.. g1^s) .. (In o_.. g1^s)], for one chain.
std::optional<std::string> check_chain_identity(const Ctx& ctx, const PlaceFunction& f,
                                                std::span<const FnMove> chain) {
  std::vector<PlaceFunction> inner;
  for (std::size_t i = 0; i < ctx.arity; ++i)
    inner.push_back(compose_sequence(ctx.projectors[i], chain));
  return diff(compose_sequence(f, chain), menger_superpose(f, inner));
}

// Slot residuals of a chain of functions, first-occurrence rule; untouched
// slots stay empty.
std::vector<std::optional<PlaceFunction>> chain_residuals(const Ctx& ctx,
                                                          std::span<const FnMove> chain) {
  std::vector<std::optional<PlaceFunction>> mu(ctx.arity);
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const std::size_t slot = chain[k].pos - 1;
    if (mu[slot]) continue;
    mu[slot] = compose_sequence(chain[k].fn, chain.subspan(k + 1));
  }
  return mu;
}

std::string residual_key(const std::vector<std::optional<PlaceFunction>>& mu) {
  std::ostringstream os;
  for (const auto& m : mu) {
    if (!m) {
      os << "_;";
      continue;
    }
    for (const auto& [t, v] : m->entries()) os << t.packed() << ":" << int(v) << ",";
    os << ";";
  }
  return os.str();
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    r *= b;
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace

IdentityReport verify_identity(IdentityId id, std::span<const NamedFunction> samples,
                               const IdentityCheckOptions& opts) {
  if (samples.empty()) fail(ErrorCode::malformed_input, "empty sample set");
  Ctx ctx;
  ctx.samples = samples;
  ctx.arity = samples[0].fn.arity();
  ctx.carrier = samples[0].fn.carrier();
  for (const NamedFunction& s : samples)
    if (s.fn.arity() != ctx.arity || !same_carrier(s.fn.carrier(), ctx.carrier))
      fail(ErrorCode::carrier_mismatch, "samples must share arity and carrier");
  for (std::size_t i = 1; i <= ctx.arity; ++i)
    ctx.projectors.push_back(projector(ctx.arity, i, ctx.carrier));
  ctx.point_space = ipow(ctx.carrier->size(), ctx.arity, 1u << 30);

  IdentityReport report{id, 0, {}};
  std::mt19937_64 rng(opts.seed ^ (0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(id) + 1)));

  auto record = [&](const std::vector<std::string>& names, const std::string& detail) {
    if (report.failures.size() < 32) report.failures.push_back(IdentityFailure{names, detail});
  };

  if (id == IdentityId::eq12) {
    const std::size_t n = ctx.arity;
    std::uniform_int_distribution<std::size_t> pick_fn(0, samples.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_pos(1, n);
    std::uniform_int_distribution<std::size_t> pick_len(0, opts.chain_length);
    for (std::uint64_t it = 0; it < opts.random_assignments; ++it) {
      const PlaceFunction& f = samples[pick_fn(rng)].fn;
      std::vector<FnMove> chain;
      std::vector<std::string> names{samples[pick_fn(rng)].name};
      const std::size_t len = pick_len(rng);
      for (std::size_t k = 0; k < len; ++k) {
        std::size_t gi = pick_fn(rng);
        chain.push_back(FnMove{pick_pos(rng), samples[gi].fn});
        names.push_back(samples[gi].name);
      }
      ++report.samples_checked;
      auto d = check_chain_identity(ctx, f, chain);
      if (d) record(names, *d);
    }
    return report;
  }

  if (id == IdentityId::eq13) {
    // All chains up to the enumeration bound over a capped operand pool,
    // grouped by residual tuple; every member must agree with its group's
    // representative composite for every outer f.
    std::vector<std::size_t> pool(samples.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    if (pool.size() > opts.operand_pool) {
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(opts.operand_pool);
      std::sort(pool.begin(), pool.end());
    }
    const std::size_t moves = ctx.arity * pool.size();
    std::uint64_t chains = 0, level = 1;
    for (std::size_t s = 1; s <= opts.enumeration_length; ++s) {
      level *= moves;
      chains += level;
    }
    if ((chains + 1) * ctx.point_space * samples.size() > opts.max_evaluations)
      fail(ErrorCode::too_large, "chain enumeration above the evaluation budget");

    struct Group {
      std::vector<FnMove> rep;
      std::vector<std::string> rep_names;
    };
    std::map<std::string, Group> groups;
    std::vector<std::vector<FnMove>> frontier{{}};
    std::vector<std::vector<std::string>> frontier_names{{}};
    for (std::size_t s = 0; s <= opts.enumeration_length; ++s) {
      for (std::size_t c = 0; c < frontier.size(); ++c) {
        const auto key = residual_key(chain_residuals(ctx, frontier[c]));
        auto [it, fresh] = groups.emplace(key, Group{frontier[c], frontier_names[c]});
        if (!fresh) {
          for (const NamedFunction& f : samples) {
            ++report.samples_checked;
            auto d = diff(compose_sequence(f.fn, frontier[c]),
                          compose_sequence(f.fn, it->second.rep));
            if (d) {
              std::vector<std::string> names{f.name};
              names.insert(names.end(), frontier_names[c].begin(), frontier_names[c].end());
              names.push_back("vs");
              names.insert(names.end(), it->second.rep_names.begin(), it->second.rep_names.end());
              record(names, *d);
            }
          }
        } else {
          report.samples_checked += samples.size();
        }
      }
      if (s == opts.enumeration_length) break;
      std::vector<std::vector<FnMove>> next;
      std::vector<std::vector<std::string>> next_names;
      for (std::size_t c = 0; c < frontier.size(); ++c)
        for (std::size_t pos = 1; pos <= ctx.arity; ++pos)
          for (std::size_t pi : pool) {
            auto chain = frontier[c];
            chain.push_back(FnMove{pos, samples[pi].fn});
            auto names = frontier_names[c];
            names.push_back(samples[pi].name);
            next.push_back(std::move(chain));
            next_names.push_back(std::move(names));
          }
      frontier = std::move(next);
      frontier_names = std::move(next_names);
    }
    return report;
  }

  const std::size_t slots = slot_count(id, ctx.arity);
  const std::uint64_t combos = ipow(samples.size(), slots, opts.max_evaluations);
  const bool exhaustive =
      opts.exhaustive && combos * ctx.point_space <= opts.max_evaluations;

  if (exhaustive) {
    Instance inst(slots, 0);
    while (true) {
      ++report.samples_checked;
      auto d = check_instance(id, ctx, inst);
      if (d) record(instance_names(ctx, inst), *d);
      std::size_t i = slots;
      bool done = (slots == 0);
      while (i > 0) {
        --i;
        if (++inst[i] < samples.size()) break;
        inst[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, samples.size() - 1);
    Instance inst(slots);
    for (std::uint64_t it = 0; it < opts.random_assignments; ++it) {
      for (std::size_t s = 0; s < slots; ++s) inst[s] = pick(rng);
      ++report.samples_checked;
      auto d = check_instance(id, ctx, inst);
      if (d) record(instance_names(ctx, inst), *d);
    }
  }
  return report;
}

std::vector<IdentityReport> verify_all_identities(std::span<const NamedFunction> samples,
                                                  const IdentityCheckOptions& opts) {
  std::vector<IdentityReport> out;
  for (IdentityId id : all_identities()) out.push_back(verify_identity(id, samples, opts));
  return out;
}

std::vector<NamedFunction> all_total_functions(CarrierPtr carrier, std::size_t arity,
                                               std::size_t limit) {
  const std::size_t k = carrier->size();
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < arity; ++i) points *= k;
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < points; ++i) {
    count *= k;
    if (count > limit) fail(ErrorCode::too_large, "too many total functions to enumerate");
  }

  std::vector<Tuple> space;
  for_each_tuple(k, arity, [&](const Tuple& t) { space.push_back(t); });

  std::vector<NamedFunction> out;
  out.reserve(count);
  std::vector<Elem> values(points, 0);
  for (std::uint64_t idx = 0;; ++idx) {
    std::map<Tuple, Elem> entries;
    for (std::size_t p = 0; p < points; ++p) entries.emplace(space[p], values[p]);
    out.push_back(NamedFunction{"t" + std::to_string(idx),
                                PlaceFunction(arity, carrier, std::move(entries))});
    std::size_t p = points;
    bool done = true;
    while (p > 0) {
      --p;
      if (++values[p] < k) { done = false; break; }
      values[p] = 0;
    }
    if (done) break;
  }
  return out;
}

std::vector<NamedFunction> random_partial_functions(CarrierPtr carrier, std::size_t arity,
                                                    std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> value(0, carrier->size() - 1);
  std::vector<NamedFunction> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::map<Tuple, Elem> entries;
    for_each_tuple(carrier->size(), arity, [&](const Tuple& t) {
      if (coin(rng)) entries.emplace(t, static_cast<Elem>(value(rng)));
    });
    out.push_back(NamedFunction{"r" + std::to_string(i),
                                PlaceFunction(arity, carrier, std::move(entries))});
  }
  return out;
}

}  // namespace placefn
