#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace intersector {

enum class ErrorKind {
    InvalidInput,
    ParseError,
    DivisionByZero,
    NotRational,
    OutOfRange,
    ZeroForm,
    WrongVariableOrder,
    NotCoprime,
    DegreeMismatch,
    ResiduePathInvalid,
    TruncationUnstable,
    NonIntegerResult,
    NonPositiveDimension,
    ConvergenceNotGuaranteed,
    PrecisionExhausted,
    InsufficientPoints,
    HypothesisViolated,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the engines carries a machine-readable kind so the
// CLI can map it onto an exit code and JSON error document.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace intersector
