#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acm {

enum class ErrorCode {
    RejectNegative,
    RejectInitialRamp,
    RejectNotMonotone,
    Syntax,
    InvalidLambda,
    EmptyLambda,
    EmptyCurve,
    NotSMinimal,
    NotOrdered,
    NotIntegral,
    NotLinkable,
    OutOfRange,
    STooSmall,
    CaseMismatch,
    DeltaNotPositive,
    Overflow,
};

constexpr std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::RejectNegative: return "REJECT_NEGATIVE";
    case ErrorCode::RejectInitialRamp: return "REJECT_INITIAL_RAMP";
    case ErrorCode::RejectNotMonotone: return "REJECT_NOT_MONOTONE";
    case ErrorCode::Syntax: return "SYNTAX";
    case ErrorCode::InvalidLambda: return "INVALID_LAMBDA";
    case ErrorCode::EmptyLambda: return "EMPTY_LAMBDA";
    case ErrorCode::EmptyCurve: return "EMPTY_CURVE";
    case ErrorCode::NotSMinimal: return "NOT_S_MINIMAL";
    case ErrorCode::NotOrdered: return "NOT_ORDERED";
    case ErrorCode::NotIntegral: return "NOT_INTEGRAL";
    case ErrorCode::NotLinkable: return "NOT_LINKABLE";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::STooSmall: return "S_TOO_SMALL";
    case ErrorCode::CaseMismatch: return "CASE_MISMATCH";
    case ErrorCode::DeltaNotPositive: return "DELTA_NOT_POSITIVE";
    case ErrorCode::Overflow: return "OVERFLOW";
    }
    return "UNKNOWN";
}

/// Every failure in the library is reported through this exception; `code()`
/// is the stable machine-readable part, `what()` adds context for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

} // namespace acm
