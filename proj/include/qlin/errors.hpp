#pragma once

#include <stdexcept>
#include <string>

namespace qlin {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operand shapes are not conformant for the requested operation.
class ShapeMismatchError : public Error {
public:
    using Error::Error;
};

/// Inversion of a zero quaternion.
class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

/// Input lies in the degenerate set of the operation (zero vector part, zero polar input, ...).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// The supplied pure unit quaternions are not orthogonal.
class InvalidAxesError : public Error {
public:
    using Error::Error;
};

/// A matrix required to be invertible is singular to working precision.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// An iterative scheme did not converge within its iteration budget.
class NoConvergenceError : public Error {
public:
    using Error::Error;
};

/// A complex matrix claimed to be an adjoint embedding fails the block-consistency check.
class NotInEmbeddingImageError : public Error {
public:
    using Error::Error;
};

/// Matrix entries are required to lie in a common complex subfield but do not.
class EntriesOutsideSubfieldError : public Error {
public:
    using Error::Error;
};

/// The eigenstructure is defective or cannot be resolved unambiguously.
class DefectiveOrAmbiguousError : public Error {
public:
    using Error::Error;
};

/// Malformed scalar or matrix text.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace qlin
