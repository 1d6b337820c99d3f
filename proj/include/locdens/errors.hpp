#ifndef LOCDENS_ERRORS_HPP
#define LOCDENS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace locdens {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration: unsatisfiable cutoff rule, resolution below the
/// documented minimum, malformed scenario file. The message names the
/// violated bound.
struct ConfigError : Error {
    using Error::Error;
};

/// States with mismatched mass/dimension, or grids that cannot be reconciled.
struct IncompatibilityError : Error {
    using Error::Error;
};

/// Massless state with non-suppressed psi(0) fed to a weight that is
/// singular at E -> 0.
struct SingularWeightError : Error {
    using Error::Error;
};

/// Violated operation precondition (weights not summing to one, bad
/// quantile, window outside the profile, ...).
struct PreconditionError : Error {
    using Error::Error;
};

/// Spatial domain could not be extended far enough, or a cumulative
/// inversion ran out of domain.
struct DomainError : Error {
    using Error::Error;
};

} // namespace locdens

#endif
