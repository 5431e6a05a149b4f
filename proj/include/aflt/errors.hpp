#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aflt {

enum class ErrorCode {
  Parse,
  InvalidArgument,
  NotMonic,
  Reducible,
  DegreeZero,
  Unsupported,
  DivisionByZero,
  ZeroElement,
  NotTotallyReal,
  IndexDivisor,
  SearchExhausted,
  MissingUserClassNumber,
  GeneratorNotFound,
  BasisUnavailable,
  WorkExceeded,
  IsSquare,
  RelationViolated,
  InconsistentDivisibility,
  UnsupportedCase,
  DegenerateLambda,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// The power basis Z[theta] is not q-maximal, so Dedekind factorization at q
// would produce wrong prime data.
class IndexDivisorError : public Error {
 public:
  IndexDivisorError(std::uint64_t q, const std::string& poly);
  std::uint64_t prime() const noexcept { return q_; }

 private:
  std::uint64_t q_;
};

}  // namespace aflt
