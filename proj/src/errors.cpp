#include "aflt/errors.hpp"

namespace aflt {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotTotallyReal: return "NotTotallyReal";
    case ErrorCode::IndexDivisor: return "IndexDivisor";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::MissingUserClassNumber: return "MissingUserClassNumber";
    case ErrorCode::GeneratorNotFound: return "GeneratorNotFound";
    case ErrorCode::BasisUnavailable: return "BasisUnavailable";
    case ErrorCode::WorkExceeded: return "WorkExceeded";
    case ErrorCode::IsSquare: return "IsSquare";
    case ErrorCode::RelationViolated: return "RelationViolated";
    case ErrorCode::InconsistentDivisibility: return "InconsistentDivisibility";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::DegenerateLambda: return "DegenerateLambda";
  }
  return "Unknown";
}

IndexDivisorError::IndexDivisorError(std::uint64_t q, const std::string& poly)
    : Error(ErrorCode::IndexDivisor,
            "IndexDivisor(" + std::to_string(q) + "): Z[x]/(" + poly + ") is not " +
                std::to_string(q) + "-maximal; supply a different defining polynomial"),
      q_(q) {}

}  // namespace aflt
