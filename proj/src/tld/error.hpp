#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tld {

enum class ErrorCode {
  ParseError = 1,
  MalformedEdge,
  OverlappingParallelEdges,
  DeltaOutOfRange,
  EventBlowup,
  InvalidProfile,
  EmptyRanking,
  BrokenChain,
  NonConfluentInput,
  PreconditionViolated,
  NotRetrospective,
  CapExceeded,
  ScaleExceeded,
  Infeasible,
  MalformedTmstInstance,
  InvalidParams,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace tld
