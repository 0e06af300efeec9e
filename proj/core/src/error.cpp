#include "dbgmatch/error.hpp"

namespace dbgmatch {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::AlphabetRange: return "AlphabetRange";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::NoIncomingWalk: return "NoIncomingWalk";
    case ErrorCode::AmbiguousImplicitLabel: return "AmbiguousImplicitLabel";
    case ErrorCode::SizeCap: return "SizeCap";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::Range: return "Range";
    case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::EmptyPattern: return "EmptyPattern";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InfeasibleRequest: return "InfeasibleRequest";
    }
    return "Unknown";
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorCode::Parse,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

} // namespace dbgmatch
