#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bipaths {

enum class ErrorCode {
    LoopRejected,
    UnknownVertex,
    DuplicateVertex,
    SideConditionViolated,
    NotAnXPath,
    NotAlternating,
    EndpointsNotInX,
    InvalidSeed,
    InvalidK,
    InternalDualityMismatch,
    LimitExceeded,
    ParseError,
    InvalidParameter,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the exhaustive routines when an instance exceeds their guard.
/// `partial()` is the amount of work (paths, states) completed before giving up.
class LimitExceeded : public Error {
public:
    LimitExceeded(const std::string& what, std::size_t partial)
        : Error(ErrorCode::LimitExceeded, what), partial_(partial) {}

    std::size_t partial() const noexcept { return partial_; }

private:
    std::size_t partial_;
};

/// Parse failure with a 1-based source location.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error(ErrorCode::ParseError,
                std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace bipaths
