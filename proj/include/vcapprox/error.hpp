#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vcapprox {

enum class ErrorCode {
    InvalidEdge,
    InvalidWeight,
    InvalidSet,
    DimensionMismatch,
    InconsistentCut,
    CrownViolation,
    NotACover,
    TooLarge,
    InvalidSwapSize,
    InvalidEpsilon,
    InvalidShape,
    InvalidParameter,
    MissingHeader,
    DuplicateVertexLine,
    EdgeCountMismatch,
    MalformedLine,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure; `line()` is 1-based, 0 when the problem is not tied to a line.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t line, const std::string& message)
        : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace vcapprox
