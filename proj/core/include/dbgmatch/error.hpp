#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dbgmatch {

enum class ErrorCode {
    AlphabetRange,
    UnknownVertex,
    SameVertex,
    LabelMismatch,
    NoIncomingWalk,
    AmbiguousImplicitLabel,
    SizeCap,
    InvariantViolation,
    Range,
    NotPowerOfTwo,
    DimensionTooSmall,
    EmptyPattern,
    CapExceeded,
    Parse,
    InfeasibleRequest,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with the 1-based line and column it was detected at.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace dbgmatch
