#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ricci {

enum class ErrorCode {
  // graph construction
  SelfLoop,
  DuplicateEdge,
  Disconnected,
  DegreeOverflow,
  VertexOutOfRange,
  BadWeight,
  // geodesic machinery
  NotACycle,
  DisconnectedSubset,
  DegreeTooHigh,
  NotGeodesic,
  // serialization
  MalformedHeader,
  TruncatedBits,
  MalformedBits,
  MalformedJson,
  MalformedRational,
  // curvature
  EpsilonOutOfRange,
  MassMismatch,
  NotAdjacent,
  NoConvergence,
  WrongScheme,
  // families / classify / enumerate / harmonic
  BadParam,
  SelfValidationFailed,
  NotInClassG,
  ResourceExceeded,
  SingularSystem,
  DataFile,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ricci
