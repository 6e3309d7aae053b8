#include "sullivan/error.hpp"

namespace sullivan {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MixedContexts: return "MixedContexts";
    case ErrorKind::MappingNotWellDefined: return "MappingNotWellDefined";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::CutoffMismatch: return "CutoffMismatch";
    case ErrorKind::LieInvalid: return "LieInvalid";
    case ErrorKind::NotQuadratic: return "NotQuadratic";
    case ErrorKind::SeedInvalid: return "SeedInvalid";
    case ErrorKind::CensusMismatch: return "CensusMismatch";
    case ErrorKind::ClosednessViolation: return "ClosednessViolation";
    case ErrorKind::RestrictionMismatch: return "RestrictionMismatch";
    case ErrorKind::RelativeMinimalityViolation: return "RelativeMinimalityViolation";
    case ErrorKind::DSquaredViolation: return "DSquaredViolation";
    case ErrorKind::BaseNotQuadratic: return "BaseNotQuadratic";
    case ErrorKind::HypothesesNotMet: return "HypothesesNotMet";
    case ErrorKind::NotSpherical: return "NotSpherical";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace sullivan
