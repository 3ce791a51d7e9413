#ifndef PLACEFN_MU_HPP
#define PLACEFN_MU_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "placefn/multi_semigroup.hpp"
#include "placefn/tuple.hpp"

namespace placefn {

// Residual of a composition chain at one argument slot.
//
// For a chain  x o_{i1} y1 o_{i2} y2 ... o_{is} ys  the slot-i residual is
// the fold of the *first* operand written into slot i with every later move:
// if k is minimal with i_k = i, residual_i = y_k o_{i(k+1)} ... o_{is} y_s.
// Slots never written to have no residual.  The first-occurrence rule is the
// one consistent with substitution semantics: later writes to an occupied
// slot feed the earlier composite instead of replacing it.
//
// A MuTuple is the n-vector of residuals with untouched slots carrying their
// own selector marker.  Markers are tagged out-of-band (never aliased to a
// carrier element), and the marker at slot i always stands for slot i
// specifically.  The MuTuple is the canonical state of a chain: chains with
// equal MuTuples act identically on every seed element exactly when the
// algebra is representable.

class MuTuple {
 public:
  static constexpr std::uint8_t kSelector = 0xFF;

  // All-selector tuple (the state of the empty chain).
  static MuTuple initial(std::size_t n);

  std::size_t size() const { return n_; }
  bool is_selector(std::size_t i) const { return comp_[i] == kSelector; }
  Elem element(std::size_t i) const { return comp_[i]; }
  std::size_t element_count() const;

  void set_element(std::size_t i, Elem v) { comp_[i] = v; }

  // Raw component: carrier element id or kSelector.
  std::uint8_t raw(std::size_t i) const { return comp_[i]; }

  std::uint64_t packed() const;

  // Tuple over an enlarged carrier where slot i's marker is rendered as
  // selector_ids[i].
  Tuple render(std::span<const Elem> selector_ids) const;

  friend auto operator<=>(const MuTuple& a, const MuTuple& b) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxArity> comp_{};
};

std::string to_string(const MuTuple& t, const Carrier& carrier);

// Slot-pos residual of seq, or nullopt when pos never occurs.
std::optional<Elem> mu(const MultiSemigroup& alg, std::span<const OpMove> seq, std::size_t pos);

// All residuals at once, untouched slots marked.
MuTuple mu_star(const MultiSemigroup& alg, std::span<const OpMove> seq);

// Incremental form: mu_step(mu_star(s), m) == mu_star(s ++ [m]).
MuTuple mu_step(const MultiSemigroup& alg, const MuTuple& t, OpMove m);

}  // namespace placefn

#endif  // PLACEFN_MU_HPP
