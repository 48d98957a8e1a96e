#pragma once

#include <stdexcept>
#include <string>

namespace qpsi {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a denominator factor vanished (within pole_eps)
struct PoleError : Error { using Error::Error; };
struct TruncationError : Error { using Error::Error; };
struct NonConvergence : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct UnknownIdentity : Error { using Error::Error; };
struct UnknownEntry : Error { using Error::Error; };
struct NonUnit : Error { using Error::Error; };
struct Instability : Error { using Error::Error; };
struct RangeOverflow : Error { using Error::Error; };

}  // namespace qpsi
