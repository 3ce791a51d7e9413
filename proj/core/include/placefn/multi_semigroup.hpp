#ifndef PLACEFN_MULTI_SEMIGROUP_HPP
#define PLACEFN_MULTI_SEMIGROUP_HPP

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "placefn/carrier.hpp"

namespace placefn {

// One binary operation table over a carrier of size k, row-major:
// table[x * k + y] = x o y.
using OpTable = std::vector<Elem>;

struct AssocFailure {
  std::size_t op;  // 1-based operation index
  Elem x, y, z;    // (x o y) o z != x o (y o z)
};

// Finite carrier with n individually associative binary operations.
// Associativity is checked exhaustively at construction.
class MultiSemigroup {
 public:
  // Returns the validated algebra or the first associativity counterexample.
  static std::variant<MultiSemigroup, AssocFailure> validate(CarrierPtr carrier,
                                                             std::vector<OpTable> tables);

  // Throwing form (MalformedTable on a non-associative table).
  MultiSemigroup(CarrierPtr carrier, std::vector<OpTable> tables);

  std::size_t op_count() const { return tables_.size(); }
  std::size_t size() const { return carrier_->size(); }
  const CarrierPtr& carrier() const { return carrier_; }
  const std::vector<OpTable>& tables() const { return tables_; }

  // x o_pos y, pos 1-based.
  Elem apply(std::size_t pos, Elem x, Elem y) const {
    return tables_[pos - 1][static_cast<std::size_t>(x) * carrier_->size() + y];
  }

  bool operator==(const MultiSemigroup& o) const {
    return *carrier_ == *o.carrier_ && tables_ == o.tables_;
  }

 private:
  MultiSemigroup() = default;

  CarrierPtr carrier_;
  std::vector<OpTable> tables_;
};

// One step o_pos(operand) of a composition chain.
struct OpMove {
  std::size_t pos;  // 1-based
  Elem operand;

  bool operator==(const OpMove&) const = default;
};

using MoveSeq = std::vector<OpMove>;

// Left fold of the tables over seq starting at g.
Elem eval_sequence(const MultiSemigroup& alg, Elem g, std::span<const OpMove> seq);

// Shape/range check of raw tables (square, entries in carrier).
void check_tables(const Carrier& carrier, const std::vector<OpTable>& tables);

}  // namespace placefn

#endif  // PLACEFN_MULTI_SEMIGROUP_HPP
