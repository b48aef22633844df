#pragma once

#include <stdexcept>
#include <string>

namespace edmd {

/// Base class of all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Evaluation point too close to a pole, or an argument outside the
/// admissible domain (e.g. |mu| >= 1, |w| != 1).
struct DomainError : Error {
    using Error::Error;
};

/// Dictionary, map and sample set dimensions do not agree.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// The two inverse-branch roots coincide (critical point on the circle).
struct DegenerateBranch : Error {
    using Error::Error;
};

/// All singular values of the Gram matrix fall below the cutoff.
struct SingularGram : Error {
    using Error::Error;
};

/// Data matrix has numerical rank zero.
struct SingularData : Error {
    using Error::Error;
};

/// No unique attracting fixed point inside the unit disk.
struct NoInteriorFixedPoint : Error {
    using Error::Error;
};

/// Eigensolver failed to converge or violated its residual contract.
struct ConvergenceFailure : Error {
    using Error::Error;
};

/// Invalid or inconsistent experiment configuration.
struct ConfigError : Error {
    using Error::Error;
};

/// File system failure; message carries the offending path.
struct IoError : Error {
    using Error::Error;
};

} // namespace edmd
