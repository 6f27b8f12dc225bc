#pragma once

#include <stdexcept>
#include <string>

namespace scfde {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shape/length mismatches: empty DFT, taps longer than the block, stream
/// counts exceeding antenna counts, block length mismatches.
struct DimensionError : Error {
  using Error::Error;
};

/// Numeric-domain failures: non-finite input, broken Hermitian symmetry,
/// indefinite pivots, rank deficiency, singular or ill-conditioned systems.
struct NumericError : Error {
  using Error::Error;
};

/// Configuration problems: unknown keys, invariant violations, missing
/// bootstrap symbols.
struct ConfigError : Error {
  using Error::Error;
};

/// Requested update cannot be formed (e.g. zero dual multiplier).
struct ConvergenceError : Error {
  using Error::Error;
};

}  // namespace scfde
