#pragma once

#include <stdexcept>
#include <string>

namespace ecq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularCurveError : Error { using Error::Error; };
struct NotOnCurveError : Error { using Error::Error; };
struct NonCanonicalDenominatorsError : Error { using Error::Error; };
struct NotCoprimeError : Error { using Error::Error; };
struct FactorizationTimeoutError : Error { using Error::Error; };
struct NonPositiveDiscriminantError : Error { using Error::Error; };
struct MixedDiscriminantsError : Error { using Error::Error; };
struct ImprimitiveFormError : Error { using Error::Error; };
struct DiscriminantMismatchError : Error { using Error::Error; };
struct NotPrimeError : Error { using Error::Error; };
struct PrimeTooSmallError : Error { using Error::Error; };
struct NoOddNormRepresentativeError : Error { using Error::Error; };
struct NotSquarefreeError : Error { using Error::Error; };
struct TorsionPointError : Error { using Error::Error; };
struct NotOkError : Error { using Error::Error; };

// Internal invariant violation; maps to exit code 3 in the CLI.
struct AssertionError : Error { using Error::Error; };

} // namespace ecq
