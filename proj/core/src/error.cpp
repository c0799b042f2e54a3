#include "intersector/error.hpp"

namespace intersector {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::NotRational: return "NotRational";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::ZeroForm: return "ZeroForm";
        case ErrorKind::WrongVariableOrder: return "WrongVariableOrder";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::ResiduePathInvalid: return "ResiduePathInvalid";
        case ErrorKind::TruncationUnstable: return "TruncationUnstable";
        case ErrorKind::NonIntegerResult: return "NonIntegerResult";
        case ErrorKind::NonPositiveDimension: return "NonPositiveDimension";
        case ErrorKind::ConvergenceNotGuaranteed: return "ConvergenceNotGuaranteed";
        case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorKind::InsufficientPoints: return "InsufficientPoints";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    }
    return "Unknown";
}

}  // namespace intersector
