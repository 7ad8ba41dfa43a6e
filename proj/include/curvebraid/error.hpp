#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvebraid {

enum class ErrorCode {
  InvalidInput,
  NonConvergence,
  DegenerateLeadingCoeff,
  StepCollapse,
  MatchingAmbiguity,
  TangentialCrossing,
  NonSquarefree,
  ResolutionFailure,
  NonTransversal,
  NonSimpleTerminal,
  NotAKnot,
  TooLarge,
};

std::string_view to_string(ErrorCode code);

/// Process exit status for a failure of the given kind (2 input, 3 numerical, 4 budget).
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace curvebraid
