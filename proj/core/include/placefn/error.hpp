#ifndef PLACEFN_ERROR_HPP
#define PLACEFN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace placefn {

enum class ErrorCode {
  arity_mismatch,
  carrier_mismatch,
  malformed_tuple,
  position_out_of_range,
  wrong_list_length,
  unknown_identity,
  malformed_table,
  unknown_element,
  cap_exceeded,
  not_representable,
  not_a_representation,
  empty_set,
  not_unitary_extension,
  invalid_pair,
  carriers_not_disjoint,
  system_check_failed,
  too_large,
  malformed_input,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace placefn

#endif  // PLACEFN_ERROR_HPP
