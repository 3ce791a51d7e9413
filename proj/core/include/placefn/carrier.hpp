#ifndef PLACEFN_CARRIER_HPP
#define PLACEFN_CARRIER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "placefn/error.hpp"

namespace placefn {

// Interned element id.  External formats speak element names; everything
// internal works on small integers so tuples pack into machine words.
using Elem = std::uint8_t;

// Largest carrier we accept.  0xFF is reserved as the selector sentinel in
// MuTuple, so ids range over 0..253.
inline constexpr std::size_t kMaxCarrierSize = 254;

class Carrier {
 public:
  explicit Carrier(std::vector<std::string> names);

  // Carrier {"0", "1", ..., "k-1"}.
  static Carrier of_size(std::size_t k);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Elem e) const { return names_.at(e); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Elem> find(std::string_view name) const;
  Elem require(std::string_view name) const;
  bool contains(Elem e) const { return e < names_.size(); }

  bool operator==(const Carrier& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> index_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

inline CarrierPtr make_carrier(std::vector<std::string> names) {
  return std::make_shared<const Carrier>(std::move(names));
}

inline CarrierPtr make_carrier(std::size_t k) {
  return std::make_shared<const Carrier>(Carrier::of_size(k));
}

inline bool same_carrier(const CarrierPtr& a, const CarrierPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace placefn

#endif  // PLACEFN_CARRIER_HPP
