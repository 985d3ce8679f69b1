#pragma once

#include <stdexcept>
#include <string>

namespace starkcol {

enum class ErrorCode {
    // input / domain errors (CLI exit 2)
    DTooSmall,
    NotSquareFree,
    EvenPrime,
    NotSplit,
    InertPrime,
    ZeroLeadingCoefficient,
    DiscriminantMismatch,
    DiscriminantTooLarge,
    GroupTooLarge,
    ZeroInput,
    DivisionByZero,
    DivisibleByP,
    OrderExceedsDegree,
    TOutsideDomain,
    MessageLengthMismatch,
    BadDiscriminant,
    UnitSizeExceeded,
    BadArgument,

    // mathematical refusals (CLI exit 3)
    NonCyclicGroup,
    Disconnected,
    Trivial,
    GeneratorSetInsufficient,
    OutsideConvergenceDomain,
    ConvergenceHypothesisFailed,
    PDividesClassNumber,
    ResidualTooLarge,

    // precision exhaustion (CLI exit 4)
    PrecisionExhausted,
    IndistinguishableFromZero,
    IllConditioned,
};

// Exit-code category used by the CLI: 2 input/domain, 3 refusal, 4 precision.
inline int exit_category(ErrorCode c) {
    switch (c) {
    case ErrorCode::NonCyclicGroup:
    case ErrorCode::Disconnected:
    case ErrorCode::Trivial:
    case ErrorCode::GeneratorSetInsufficient:
    case ErrorCode::OutsideConvergenceDomain:
    case ErrorCode::ConvergenceHypothesisFailed:
    case ErrorCode::PDividesClassNumber:
    case ErrorCode::ResidualTooLarge:
        return 3;
    case ErrorCode::PrecisionExhausted:
    case ErrorCode::IndistinguishableFromZero:
    case ErrorCode::IllConditioned:
        return 4;
    default:
        return 2;
    }
}

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_name(code)) + ": " + msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace starkcol
