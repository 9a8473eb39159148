#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccr {

enum class ErrorKind {
    NotSquare,
    NotAntisymmetric,
    DimensionMismatch,
    PairingFailure,
    FactorizationFailure,
    NotHermitian,
    NotPSD,
    DimensionCapExceeded,
    CutoffExceeded,
    CutoffMismatch,
    EigensolveFailure,
    HeadroomViolation,
    DeltaTooSmall,
    EmptyGrid,
    HypothesisUnmet,
    ParseError,
    ValidationError,
    IoError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace ccr
