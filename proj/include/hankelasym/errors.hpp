#pragma once

#include <stdexcept>

namespace hankelasym {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// Requested truncation dimension exceeds the dense-storage cap.
struct DimensionTooLarge : Error {
    using Error::Error;
};

/// The dense eigensolver did not converge.
struct EigensolverFailed : Error {
    using Error::Error;
};

/// A series evaluation exhausted its term budget before reaching tolerance.
struct SeriesNotConverged : Error {
    using Error::Error;
};

/// Two quadrature refinement levels disagree beyond the acceptance gap.
struct QuadratureNotConverged : Error {
    using Error::Error;
};

/// A determinant factor 1 - beta*lambda is numerically zero.
struct SingularMatrix : Error {
    using Error::Error;
};

/// Too few samples for a slope estimate.
struct InsufficientData : Error {
    using Error::Error;
};

/// Malformed run configuration or input file.
struct ConfigError : Error {
    using Error::Error;
};

} // namespace hankelasym
