#include "placefn/carrier.hpp"

namespace placefn {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::arity_mismatch: return "ArityMismatch";
    case ErrorCode::carrier_mismatch: return "CarrierMismatch";
    case ErrorCode::malformed_tuple: return "MalformedTuple";
    case ErrorCode::position_out_of_range: return "PositionOutOfRange";
    case ErrorCode::wrong_list_length: return "WrongListLength";
    case ErrorCode::unknown_identity: return "UnknownIdentity";
    case ErrorCode::malformed_table: return "MalformedTable";
    case ErrorCode::unknown_element: return "UnknownElement";
    case ErrorCode::cap_exceeded: return "CapExceeded";
    case ErrorCode::not_representable: return "NotRepresentable";
    case ErrorCode::not_a_representation: return "NotARepresentation";
    case ErrorCode::empty_set: return "EmptySet";
    case ErrorCode::not_unitary_extension: return "NotUnitaryExtension";
    case ErrorCode::invalid_pair: return "InvalidPair";
    case ErrorCode::carriers_not_disjoint: return "CarriersNotDisjoint";
    case ErrorCode::system_check_failed: return "SystemCheckFailed";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::malformed_input: return "MalformedInput";
  }
  return "Error";
}

Carrier::Carrier(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) fail(ErrorCode::malformed_input, "carrier must be nonempty");
  if (names_.size() > kMaxCarrierSize)
    fail(ErrorCode::too_large, "carrier above " + std::to_string(kMaxCarrierSize) + " elements");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    auto [it, fresh] = index_.emplace(names_[i], static_cast<Elem>(i));
    if (!fresh) fail(ErrorCode::malformed_input, "duplicate carrier element '" + names_[i] + "'");
  }
}

Carrier Carrier::of_size(std::size_t k) {
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t i = 0; i < k; ++i) names.push_back(std::to_string(i));
  return Carrier(std::move(names));
}

std::optional<Elem> Carrier::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem Carrier::require(std::string_view name) const {
  auto e = find(name);
  if (!e) fail(ErrorCode::unknown_element, "'" + std::string(name) + "' not in carrier");
  return *e;
}

}  // namespace placefn
