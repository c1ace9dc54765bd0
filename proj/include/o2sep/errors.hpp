#pragma once

#include <stdexcept>

namespace o2sep {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAPrimePower : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct MixedFields : Error { using Error::Error; };
struct MixedArity : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct BadDescriptor : Error { using Error::Error; };
struct ArityShrink : Error { using Error::Error; };
struct ZeroAlpha : Error { using Error::Error; };
struct NotInSAlpha : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct NotSeparating : Error { using Error::Error; };
struct NonInvariantMember : Error { using Error::Error; };
struct NotFoundWithinBudget : Error { using Error::Error; };
struct PoolTooLarge : Error { using Error::Error; };

}  // namespace o2sep
