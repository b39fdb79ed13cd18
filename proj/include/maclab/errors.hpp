#pragma once

#include <stdexcept>
#include <string>

namespace maclab {

/** Error categories surfaced by the library; names double as CLI messages. */
enum class ErrorKind {
    InvalidParts,
    BoxOutOfShape,
    UnbalancedWord,
    NotAHookPair,
    NotACore,
    UnbalancedVector,
    InvalidFamilyVector,
    NotInFamily,
    TagMismatch,
    TauZeroArgument,
    EmptyPartition,
    NonDivisible,
    RingMismatch,
    NonConvergentFactor,
    BadConstantTerm,
    ParameterOutOfRange,
    ZeroDenominator,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail)
        , kind_(kind)
    {
    }

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace maclab
