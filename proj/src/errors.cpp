#include "highgenus/errors.hpp"

namespace highgenus {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::EdgeDegree: return "EdgeDegree";
    case ErrorCode::BrokenLink: return "BrokenLink";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::IrregularFace: return "IrregularFace";
    case ErrorCode::InvalidScheme: return "InvalidScheme";
    case ErrorCode::FlowViolation: return "FlowViolation";
    case ErrorCode::LabelReuse: return "LabelReuse";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::NotSingleCycle: return "NotSingleCycle";
    case ErrorCode::NotFourGPlusOne: return "NotFourGPlusOne";
    case ErrorCode::UnsupportedPrimePower: return "UnsupportedPrimePower";
    case ErrorCode::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::NotPreserved: return "NotPreserved";
    case ErrorCode::DegenerateSpan: return "DegenerateSpan";
    case ErrorCode::MissingCertificate: return "MissingCertificate";
    case ErrorCode::VertexLost: return "VertexLost";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

ErrorKind kind_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return ErrorKind::Parse;
    case ErrorCode::NotPreserved:
    case ErrorCode::MissingCertificate:
    case ErrorCode::VertexLost:
    case ErrorCode::CertificationFailed:
      return ErrorKind::Certification;
    case ErrorCode::InternalAssertion:
      return ErrorKind::Internal;
    default:
      return ErrorKind::Domain;
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::Domain: return 3;
    case ErrorKind::Certification: return 4;
    case ErrorKind::Internal: return 5;
  }
  return 5;
}

}  // namespace highgenus
