// errors.hpp
// Exception hierarchy shared by the whole library.  Everything a caller can
// recover from derives from Error; plain precondition abuse (negative counts,
// bad enum-ish arguments) stays std::invalid_argument.

#pragma once

#include <stdexcept>

namespace weaklens {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// normalize() called on a vector whose norm is at or below 1e-12.
struct ZeroVectorError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct NotHermitianError : Error {
    using Error::Error;
};

// Dense eigendecomposition refused above dim 64.
struct DimensionTooLargeError : Error {
    using Error::Error;
};

// <phi|psi> vanished (or fell below the hard threshold): the weak value
// diverges here and no finite answer exists.
struct PoleError : Error {
    using Error::Error;
};

// Generalized pole of a two-observable ratio: <phi|A2|psi> vanished.
struct RatioPoleError : PoleError {
    using PoleError::PoleError;
};

// arg F is meaningless where |F| sits below the magnitude floor.
struct PhaseUndefinedError : Error {
    using Error::Error;
};

// Eigenvalue spacings incommensurate with the requested DFT period, so the
// sampled signal would not close and the spectrum would smear.
struct NotPeriodicError : Error {
    using Error::Error;
};

struct InvalidResolutionError : Error {
    using Error::Error;
};

}  // namespace weaklens
