#include "tld/error.hpp"

namespace tld {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MalformedEdge: return "MalformedEdge";
    case ErrorCode::OverlappingParallelEdges: return "OverlappingParallelEdges";
    case ErrorCode::DeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorCode::EventBlowup: return "EventBlowup";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::EmptyRanking: return "EmptyRanking";
    case ErrorCode::BrokenChain: return "BrokenChain";
    case ErrorCode::NonConfluentInput: return "NonConfluentInput";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotRetrospective: return "NotRetrospective";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ScaleExceeded: return "ScaleExceeded";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::MalformedTmstInstance: return "MalformedTmstInstance";
    case ErrorCode::InvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

}  // namespace tld
