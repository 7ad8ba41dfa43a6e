#include "curvebraid/error.hpp"

namespace curvebraid {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidInput: return "InvalidInput";
  case ErrorCode::NonConvergence: return "NonConvergence";
  case ErrorCode::DegenerateLeadingCoeff: return "DegenerateLeadingCoeff";
  case ErrorCode::StepCollapse: return "StepCollapse";
  case ErrorCode::MatchingAmbiguity: return "MatchingAmbiguity";
  case ErrorCode::TangentialCrossing: return "TangentialCrossing";
  case ErrorCode::NonSquarefree: return "NonSquarefree";
  case ErrorCode::ResolutionFailure: return "ResolutionFailure";
  case ErrorCode::NonTransversal: return "NonTransversal";
  case ErrorCode::NonSimpleTerminal: return "NonSimpleTerminal";
  case ErrorCode::NotAKnot: return "NotAKnot";
  case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

int exit_status(ErrorCode code) {
  switch (code) {
  case ErrorCode::InvalidInput:
  case ErrorCode::NotAKnot:
    return 2;
  case ErrorCode::TooLarge:
    return 4;
  default:
    return 3;
  }
}

} // namespace curvebraid
