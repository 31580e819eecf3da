#pragma once

#include <stdexcept>
#include <string>

namespace gforge {

enum class ErrorCode {
    NotAssociative,
    NoIdentity,
    NoInverse,
    ContainsIdentity,
    NotInverseClosed,
    DoesNotGenerate,
    EnumerationCapExceeded,
    StepCapExceeded,
    CircuitCapExceeded,
    CensusCapExceeded,
    Disconnected,
    Unreachable,
    AlphabetCollision,
    InvalidArgument,
    IoError,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception; `code()` identifies the failure class and the
/// message names the offending element/triple where the contract demands it.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

} // namespace gforge
