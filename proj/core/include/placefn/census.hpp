#ifndef PLACEFN_CENSUS_HPP
#define PLACEFN_CENSUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "placefn/closure.hpp"

namespace placefn {

// Independent check of the tuple-determines-action condition: enumerate
// every chain up to max_len, compute its residual tuple definitionally
// (first-occurrence rule plus direct folds, no incremental step) and its
// action map by direct folds, and compare chains with equal tuples.
// Deliberately shares no code with the closure search.
std::optional<Violation> bruteforce_violation(const MultiSemigroup& alg, std::size_t max_len = 4);

// All associative tables over a carrier of the given order, in lexicographic
// order, found by backtracking with incremental associativity pruning.
// Refused (TooLarge) above max_tables results.
std::vector<OpTable> associative_tables(std::size_t order, std::size_t max_tables = 10'000'000);

// Minimum over all carrier permutations (applied simultaneously to every
// table) of the concatenated table encoding.
std::string canonical_form(std::size_t order, const std::vector<OpTable>& tables);

// FNV-1a of the canonical form, hex.
std::string algebra_id(std::size_t order, const std::vector<OpTable>& tables);

struct CensusRecord {
  std::string id;       // canonical hash
  std::size_t n = 0;
  std::size_t order = 0;
  std::vector<std::size_t> table_indices;  // into associative_tables(order)
  bool representable = false;
  std::optional<Violation> violation;
  std::size_t state_count = 0;  // closure size when representable
  std::optional<bool> oracle_agrees;
};

struct CensusOptions {
  bool dedup = false;
  bool oracle = false;
  std::size_t oracle_length = 4;
  std::size_t workers = 0;  // 0 = hardware concurrency
  std::size_t cap = kDefaultStateCap;
  std::uint64_t max_candidates = 100'000'000;
};

// Classifies every n-tuple of associative tables of the given order.
// Records come back in lexicographic table order (dedup keeps the first
// representative of each canonical form).
std::vector<CensusRecord> census(std::size_t n_ops, std::size_t order,
                                 const CensusOptions& opts = {});

}  // namespace placefn

#endif  // PLACEFN_CENSUS_HPP
