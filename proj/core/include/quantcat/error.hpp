#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quantcat {

enum class ErrorCode {
  unknown_element,
  type_mismatch,
  type_violation,
  enumeration_unsupported,
  enumeration_too_large,
  carrier_too_large,
  corpus_too_large,
  invalid_lattice,
  invalid_quantaloid,
  invalid_category,
  invalid_functor,
  invalid_distributor,
  invalid_morphism,
  not_completely_distributive,
  conicality_violation,
  invalid_input,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace quantcat
