#include "ricci/error.hpp"

namespace ricci {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::BadWeight: return "BadWeight";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::DisconnectedSubset: return "DisconnectedSubset";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::NotGeodesic: return "NotGeodesic";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TruncatedBits: return "TruncatedBits";
    case ErrorCode::MalformedBits: return "MalformedBits";
    case ErrorCode::MalformedJson: return "MalformedJson";
    case ErrorCode::MalformedRational: return "MalformedRational";
    case ErrorCode::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::MassMismatch: return "MassMismatch";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::WrongScheme: return "WrongScheme";
    case ErrorCode::BadParam: return "BadParam";
    case ErrorCode::SelfValidationFailed: return "SelfValidationFailed";
    case ErrorCode::NotInClassG: return "NotInClassG";
    case ErrorCode::ResourceExceeded: return "ResourceExceeded";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::DataFile: return "DataFile";
  }
  return "Unknown";
}

}  // namespace ricci
