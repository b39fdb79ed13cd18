#include "maclab/errors.hpp"

namespace maclab {

const char* error_kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidParts: return "InvalidParts";
    case ErrorKind::BoxOutOfShape: return "BoxOutOfShape";
    case ErrorKind::UnbalancedWord: return "UnbalancedWord";
    case ErrorKind::NotAHookPair: return "NotAHookPair";
    case ErrorKind::NotACore: return "NotACore";
    case ErrorKind::UnbalancedVector: return "UnbalancedVector";
    case ErrorKind::InvalidFamilyVector: return "InvalidFamilyVector";
    case ErrorKind::NotInFamily: return "NotInFamily";
    case ErrorKind::TagMismatch: return "TagMismatch";
    case ErrorKind::TauZeroArgument: return "TauZeroArgument";
    case ErrorKind::EmptyPartition: return "EmptyPartition";
    case ErrorKind::NonDivisible: return "NonDivisible";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NonConvergentFactor: return "NonConvergentFactor";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    }
    return "Error";
}

} // namespace maclab
