#include "gforge/errors.hpp"

namespace gforge {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::NoIdentity: return "NoIdentity";
        case ErrorCode::NoInverse: return "NoInverse";
        case ErrorCode::ContainsIdentity: return "ContainsIdentity";
        case ErrorCode::NotInverseClosed: return "NotInverseClosed";
        case ErrorCode::DoesNotGenerate: return "DoesNotGenerate";
        case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
        case ErrorCode::StepCapExceeded: return "StepCapExceeded";
        case ErrorCode::CircuitCapExceeded: return "CircuitCapExceeded";
        case ErrorCode::CensusCapExceeded: return "CensusCapExceeded";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::Unreachable: return "Unreachable";
        case ErrorCode::AlphabetCollision: return "AlphabetCollision";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

} // namespace gforge
