#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tki {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

// Exact division left a nonzero remainder.  When raised from an invariant
// assembly this signals a violated algebraic identity, not a user error.
struct NotDivisible : Error { using Error::Error; };

// The q-part of a polynomial is not expressible in z = q - q^-1.
struct NotExpressible : Error { using Error::Error; };

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct ZeroBase : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };
struct NegativeArgument : Error { using Error::Error; };
struct ZeroDenominatorFactor : Error { using Error::Error; };
struct RankTooSmall : Error { using Error::Error; };
struct RankMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

// A character denominator vanished at the chosen root of unity; the caller
// must enlarge the level.
struct SingularDenominator : Error { using Error::Error; };

struct RankTooLargeForEnumeration : Error { using Error::Error; };

// Iteration cap hit in the chamber reduction; indicates a bug, not data.
struct NonTermination : Error { using Error::Error; };

}  // namespace tki
