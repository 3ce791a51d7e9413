#include "placefn/multi_semigroup.hpp"

namespace placefn {

void check_tables(const Carrier& carrier, const std::vector<OpTable>& tables) {
  const std::size_t k = carrier.size();
  if (tables.empty()) fail(ErrorCode::malformed_table, "need at least one operation table");
  for (const OpTable& t : tables) {
    if (t.size() != k * k) fail(ErrorCode::malformed_table, "table is not |G| x |G|");
    for (Elem v : t)
      if (v >= k) fail(ErrorCode::malformed_table, "table entry outside carrier");
  }
}

std::variant<MultiSemigroup, AssocFailure> MultiSemigroup::validate(CarrierPtr carrier,
                                                                    std::vector<OpTable> tables) {
  if (!carrier) fail(ErrorCode::malformed_input, "null carrier");
  check_tables(*carrier, tables);
  const std::size_t k = carrier->size();
  for (std::size_t op = 0; op < tables.size(); ++op) {
    const OpTable& t = tables[op];
    for (std::size_t x = 0; x < k; ++x)
      for (std::size_t y = 0; y < k; ++y) {
        const Elem xy = t[x * k + y];
        for (std::size_t z = 0; z < k; ++z) {
          if (t[static_cast<std::size_t>(xy) * k + z] != t[x * k + t[y * k + z]])
            return AssocFailure{op + 1, static_cast<Elem>(x), static_cast<Elem>(y),
                                static_cast<Elem>(z)};
        }
      }
  }
  MultiSemigroup alg;
  alg.carrier_ = std::move(carrier);
  alg.tables_ = std::move(tables);
  return alg;
}

MultiSemigroup::MultiSemigroup(CarrierPtr carrier, std::vector<OpTable> tables) {
  auto r = validate(std::move(carrier), std::move(tables));
  if (auto* bad = std::get_if<AssocFailure>(&r)) {
    fail(ErrorCode::malformed_table,
         "operation " + std::to_string(bad->op) + " is not associative at (" +
             std::to_string(bad->x) + "," + std::to_string(bad->y) + "," + std::to_string(bad->z) +
             ")");
  }
  *this = std::get<MultiSemigroup>(std::move(r));
}

Elem eval_sequence(const MultiSemigroup& alg, Elem g, std::span<const OpMove> seq) {
  if (g >= alg.size()) fail(ErrorCode::unknown_element, "eval_sequence seed");
  Elem acc = g;
  for (const OpMove& m : seq) {
    if (m.pos < 1 || m.pos > alg.op_count()) fail(ErrorCode::position_out_of_range, "eval_sequence");
    if (m.operand >= alg.size()) fail(ErrorCode::unknown_element, "eval_sequence operand");
    acc = alg.apply(m.pos, acc, m.operand);
  }
  return acc;
}

}  // namespace placefn
