#include "placefn/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <thread>

namespace placefn {

std::optional<Violation> bruteforce_violation(const MultiSemigroup& alg, std::size_t max_len) {
  const std::size_t n = alg.op_count();
  const std::size_t k = alg.size();

  // Residual tuple by definition: slot i takes the operand of the first move
  // at i folded with everything after it.
  auto definitional_tuple = [&](const MoveSeq& seq) {
    MuTuple t = MuTuple::initial(n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t p = 0; p < seq.size(); ++p) {
        if (seq[p].pos != i) continue;
        Elem acc = seq[p].operand;
        for (std::size_t q = p + 1; q < seq.size(); ++q)
          acc = alg.apply(seq[q].pos, acc, seq[q].operand);
        t.set_element(i - 1, acc);
        break;
      }
    }
    return t;
  };
  auto act_of = [&](const MoveSeq& seq) {
    std::vector<Elem> act(k);
    for (std::size_t g = 0; g < k; ++g) {
      Elem acc = static_cast<Elem>(g);
      for (const OpMove& m : seq) acc = alg.apply(m.pos, acc, m.operand);
      act[g] = acc;
    }
    return act;
  };

  std::map<std::uint64_t, std::pair<MoveSeq, std::vector<Elem>>> groups;
  std::vector<MoveSeq> frontier{{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (const MoveSeq& seq : frontier) {
      const MuTuple tuple = definitional_tuple(seq);
      const std::vector<Elem> act = act_of(seq);
      auto [it, fresh] = groups.emplace(tuple.packed(), std::make_pair(seq, act));
      if (fresh || it->second.second == act) continue;

      Violation v;
      v.tuple = tuple;
      v.seq_u = it->second.first;
      v.seq_v = seq;
      Elem g = 0;
      while (it->second.second[g] == act[g]) ++g;
      v.g = g;
      v.left = it->second.second[g];
      v.right = act[g];
      return v;
    }
    if (len == max_len) break;
    std::vector<MoveSeq> next;
    next.reserve(frontier.size() * n * k);
    for (const MoveSeq& seq : frontier)
      for (std::size_t pos = 1; pos <= n; ++pos)
        for (std::size_t y = 0; y < k; ++y) {
          MoveSeq longer = seq;
          longer.push_back(OpMove{pos, static_cast<Elem>(y)});
          next.push_back(std::move(longer));
        }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::vector<OpTable> associative_tables(std::size_t order, std::size_t max_tables) {
  const std::size_t cells = order * order;
  std::vector<OpTable> out;
  OpTable t(cells, 0);

  // Associativity triples whose four lookups are available once cell `c` is
  // filled, assuming cells fill in row-major order.
  auto filled = [&](std::size_t upto, std::size_t x, std::size_t y) {
    return x * order + y <= upto;
  };
  auto consistent_at = [&](std::size_t upto) {
    for (std::size_t x = 0; x < order; ++x)
      for (std::size_t y = 0; y < order; ++y) {
        if (!filled(upto, x, y)) continue;
        const Elem xy = t[x * order + y];
        for (std::size_t z = 0; z < order; ++z) {
          if (!filled(upto, y, z)) continue;
          const Elem yz = t[y * order + z];
          if (!filled(upto, xy, z) || !filled(upto, x, yz)) continue;
          if (t[static_cast<std::size_t>(xy) * order + z] !=
              t[x * order + static_cast<std::size_t>(yz)])
            return false;
        }
      }
    return true;
  };

  // Backtrack over cells in row-major order.
  std::size_t c = 0;
  std::vector<int> choice(cells, -1);
  while (true) {
    if (static_cast<std::size_t>(++choice[c]) >= order) {
      choice[c] = -1;
      if (c == 0) break;
      --c;
      continue;
    }
    t[c] = static_cast<Elem>(choice[c]);
    if (!consistent_at(c)) continue;
    if (c + 1 == cells) {
      if (out.size() >= max_tables) fail(ErrorCode::too_large, "too many associative tables");
      out.push_back(t);
      continue;
    }
    ++c;
  }
  return out;
}

std::string canonical_form(std::size_t order, const std::vector<OpTable>& tables) {
  std::vector<Elem> perm(order);
  for (std::size_t i = 0; i < order; ++i) perm[i] = static_cast<Elem>(i);

  // Relabeled table: T'(x, y) = perm[T(perm^-1 x, perm^-1 y)], scanned
  // row-major per table.
  std::string best;
  std::vector<std::size_t> inv(order);
  do {
    for (std::size_t i = 0; i < order; ++i) inv[perm[i]] = i;
    std::string enc(tables.size() * order * order, '0');
    for (std::size_t ti = 0; ti < tables.size(); ++ti)
      for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y)
          enc[ti * order * order + x * order + y] =
              static_cast<char>('0' + perm[tables[ti][inv[x] * order + inv[y]]]);
    if (best.empty() || enc < best) best = enc;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::string algebra_id(std::size_t order, const std::vector<OpTable>& tables) {
  const std::string form =
      std::to_string(tables.size()) + "x" + std::to_string(order) + ":" +
      canonical_form(order, tables);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : form) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<CensusRecord> census(std::size_t n_ops, std::size_t order, const CensusOptions& opts) {
  if (n_ops == 0 || n_ops > kMaxArity) fail(ErrorCode::malformed_input, "n must be in 1..8");
  const std::vector<OpTable> tables = associative_tables(order);

  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < n_ops; ++i) {
    candidates *= tables.size();
    if (candidates > opts.max_candidates)
      fail(ErrorCode::too_large, "candidate tuple count above " +
                                     std::to_string(opts.max_candidates));
  }

  const CarrierPtr carrier = make_carrier(order);
  std::vector<CensusRecord> records(candidates);

  auto run_item = [&](std::uint64_t idx) {
    std::vector<std::size_t> pick(n_ops);
    std::uint64_t rest = idx;
    for (std::size_t i = n_ops; i > 0; --i) {
      pick[i - 1] = rest % tables.size();
      rest /= tables.size();
    }
    std::vector<OpTable> chosen;
    chosen.reserve(n_ops);
    for (std::size_t i : pick) chosen.push_back(tables[i]);

    CensusRecord rec;
    rec.n = n_ops;
    rec.order = order;
    rec.table_indices = pick;
    rec.id = algebra_id(order, chosen);

    MultiSemigroup alg(carrier, chosen);
    RepresentabilityResult r = is_representable(alg, opts.cap);
    rec.representable = r.representable;
    rec.violation = r.violation;
    rec.state_count = r.automaton ? r.automaton->size() : 0;
    if (opts.oracle) {
      const bool oracle_ok = !bruteforce_violation(alg, opts.oracle_length).has_value();
      rec.oracle_agrees = (oracle_ok == rec.representable);
    }
    records[idx] = std::move(rec);
  };

  std::size_t workers = opts.workers ? opts.workers : std::thread::hardware_concurrency();
  if (workers <= 1 || candidates < 32) {
    for (std::uint64_t i = 0; i < candidates; ++i) run_item(i);
  } else {
    std::atomic<std::uint64_t> cursor{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::uint64_t i = cursor.fetch_add(1); i < candidates; i = cursor.fetch_add(1))
          run_item(i);
      });
    for (std::thread& th : pool) th.join();
  }

  if (!opts.dedup) return records;

  std::vector<CensusRecord> unique;
  std::map<std::string, bool> seen;
  for (CensusRecord& rec : records)
    if (seen.emplace(rec.id, true).second) unique.push_back(std::move(rec));
  return unique;
}

}  // namespace placefn
