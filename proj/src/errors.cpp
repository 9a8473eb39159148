#include "ccrlab/errors.hpp"

namespace ccr {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PairingFailure: return "PairingFailure";
    case ErrorKind::FactorizationFailure: return "FactorizationFailure";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorKind::CutoffExceeded: return "CutoffExceeded";
    case ErrorKind::CutoffMismatch: return "CutoffMismatch";
    case ErrorKind::EigensolveFailure: return "EigensolveFailure";
    case ErrorKind::HeadroomViolation: return "HeadroomViolation";
    case ErrorKind::DeltaTooSmall: return "DeltaTooSmall";
    case ErrorKind::EmptyGrid: return "EmptyGrid";
    case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

} // namespace ccr
