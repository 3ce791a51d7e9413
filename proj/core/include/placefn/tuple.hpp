#ifndef PLACEFN_TUPLE_HPP
#define PLACEFN_TUPLE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>

#include "placefn/carrier.hpp"

namespace placefn {

inline constexpr std::size_t kMaxArity = 8;

// Fixed-length argument tuple over a carrier.  Unused slots are zeroed so
// comparison and hashing can work on the raw bytes.
class Tuple {
 public:
  Tuple() : len_(0), comp_{} {}

  Tuple(std::initializer_list<Elem> xs) : len_(0), comp_{} {
    for (Elem x : xs) {
      if (len_ >= kMaxArity) fail(ErrorCode::malformed_tuple, "arity above limit");
      comp_[len_++] = x;
    }
  }

  static Tuple filled(std::size_t n, Elem v) {
    Tuple t;
    if (n > kMaxArity) fail(ErrorCode::malformed_tuple, "arity above limit");
    t.len_ = static_cast<std::uint8_t>(n);
    for (std::size_t i = 0; i < n; ++i) t.comp_[i] = v;
    return t;
  }

  std::size_t size() const { return len_; }
  Elem operator[](std::size_t i) const { return comp_[i]; }

  void set(std::size_t i, Elem v) { comp_[i] = v; }

  // Copy with slot i (0-based) replaced by v.
  Tuple with(std::size_t i, Elem v) const {
    Tuple t = *this;
    t.comp_[i] = v;
    return t;
  }

  std::uint64_t packed() const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < len_; ++i) k = (k << 8) | comp_[i];
    return k;
  }

  friend auto operator<=>(const Tuple& a, const Tuple& b) = default;

 private:
  std::uint8_t len_;
  std::array<Elem, kMaxArity> comp_;
};

// Lexicographic enumeration of all size^arity tuples.
template <typename Fn>
void for_each_tuple(std::size_t carrier_size, std::size_t arity, Fn&& fn) {
  Tuple t = Tuple::filled(arity, 0);
  if (carrier_size == 0) return;
  while (true) {
    fn(static_cast<const Tuple&>(t));
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (t[i] + 1u < carrier_size) {
        t.set(i, static_cast<Elem>(t[i] + 1));
        break;
      }
      t.set(i, 0);
      if (i == 0) return;
    }
    if (arity == 0) return;
  }
}

struct TupleHash {
  std::size_t operator()(const Tuple& t) const {
    return std::hash<std::uint64_t>()(t.packed() ^ (static_cast<std::uint64_t>(t.size()) << 56));
  }
};

}  // namespace placefn

#endif  // PLACEFN_TUPLE_HPP
