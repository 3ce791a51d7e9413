#include "placefn/mu.hpp"

namespace placefn {

MuTuple MuTuple::initial(std::size_t n) {
  if (n == 0 || n > kMaxArity) fail(ErrorCode::malformed_input, "slot count must be in 1..8");
  MuTuple t;
  t.n_ = static_cast<std::uint8_t>(n);
  t.comp_.fill(kSelector);
  return t;
}

std::size_t MuTuple::element_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (!is_selector(i)) ++c;
  return c;
}

std::uint64_t MuTuple::packed() const {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < n_; ++i) k = (k << 8) | comp_[i];
  return k;
}

Tuple MuTuple::render(std::span<const Elem> selector_ids) const {
  if (selector_ids.size() < n_) fail(ErrorCode::wrong_list_length, "render needs one id per slot");
  Tuple t = Tuple::filled(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) t.set(i, is_selector(i) ? selector_ids[i] : comp_[i]);
  return t;
}

std::string to_string(const MuTuple& t, const Carrier& carrier) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += t.is_selector(i) ? "e" + std::to_string(i + 1) : carrier.name(t.element(i));
  }
  return s + ")";
}

std::optional<Elem> mu(const MultiSemigroup& alg, std::span<const OpMove> seq, std::size_t pos) {
  if (pos < 1 || pos > alg.op_count()) fail(ErrorCode::position_out_of_range, "mu");
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq[k].pos == pos)
      return eval_sequence(alg, seq[k].operand, seq.subspan(k + 1));
  }
  return std::nullopt;
}

MuTuple mu_star(const MultiSemigroup& alg, std::span<const OpMove> seq) {
  MuTuple t = MuTuple::initial(alg.op_count());
  for (std::size_t i = 1; i <= alg.op_count(); ++i) {
    auto v = mu(alg, seq, i);
    if (v) t.set_element(i - 1, *v);
  }
  return t;
}

MuTuple mu_step(const MultiSemigroup& alg, const MuTuple& t, OpMove m) {
  if (m.pos < 1 || m.pos > alg.op_count() || t.size() != alg.op_count())
    fail(ErrorCode::position_out_of_range, "mu_step");
  MuTuple out = t;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i + 1 == m.pos) {
      out.set_element(i, t.is_selector(i) ? m.operand : alg.apply(m.pos, t.element(i), m.operand));
    } else if (!t.is_selector(i)) {
      out.set_element(i, alg.apply(m.pos, t.element(i), m.operand));
    }
  }
  return out;
}

}  // namespace placefn
