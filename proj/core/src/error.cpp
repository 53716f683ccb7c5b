#include "quantcat/error.hpp"

namespace quantcat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::unknown_element: return "UnknownElement";
    case ErrorCode::type_mismatch: return "TypeMismatch";
    case ErrorCode::type_violation: return "TypeViolation";
    case ErrorCode::enumeration_unsupported: return "EnumerationUnsupported";
    case ErrorCode::enumeration_too_large: return "EnumerationTooLarge";
    case ErrorCode::carrier_too_large: return "CarrierTooLarge";
    case ErrorCode::corpus_too_large: return "CorpusTooLarge";
    case ErrorCode::invalid_lattice: return "InvalidLattice";
    case ErrorCode::invalid_quantaloid: return "InvalidQuantaloid";
    case ErrorCode::invalid_category: return "InvalidCategory";
    case ErrorCode::invalid_functor: return "InvalidFunctor";
    case ErrorCode::invalid_distributor: return "InvalidDistributor";
    case ErrorCode::invalid_morphism: return "InvalidMorphism";
    case ErrorCode::not_completely_distributive: return "NotCompletelyDistributive";
    case ErrorCode::conicality_violation: return "ConicalityViolation";
    case ErrorCode::invalid_input: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace quantcat
