#pragma once

#include <stdexcept>
#include <string>

namespace lac {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kFormatVersion = 1;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file or JSON.
struct ParseError : Error {
    using Error::Error;
};

/// Input violates a documented contract (unsorted samples, bad shapes, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Value outside the supported range (energy outside a table, Z outside 1-92).
struct RangeError : Error {
    using Error::Error;
};

/// Mathematical domain violation (non-positive energy, zero-norm reference).
struct DomainError : Error {
    using Error::Error;
};

/// Numerical failure (divergence, rank deficiency where full rank is required).
struct NumericalError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace lac
