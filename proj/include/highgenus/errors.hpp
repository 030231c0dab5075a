#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace highgenus {

/// Failure categories. Each maps to one process exit code in the CLI.
enum class ErrorKind { Parse, Domain, Certification, Internal };

enum class ErrorCode {
  ParseError,
  DomainError,
  // surface validation
  EdgeDegree,
  BrokenLink,
  Disconnected,
  IrregularFace,
  // schemes and current graphs
  InvalidScheme,
  FlowViolation,
  LabelReuse,
  NotCubic,
  NotSingleCycle,
  // finite fields
  NotFourGPlusOne,
  UnsupportedPrimePower,
  // geometry
  EpsilonOutOfRange,
  NotPreserved,
  DegenerateSpan,
  MissingCertificate,
  VertexLost,
  CertificationFailed,
  InternalAssertion,
};

std::string_view to_string(ErrorCode code);
ErrorKind kind_of(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorKind kind() const noexcept { return kind_of(code_); }

 private:
  ErrorCode code_;
};

/// Exit codes: 0 ok, 2 parse, 3 domain, 4 certification failure, 5 internal.
int exit_code_for(ErrorKind kind);

}  // namespace highgenus
