#pragma once

#include <stdexcept>
#include <string>

namespace capflow {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input violates a domain-type invariant (negative radius, r_min > r_max, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Axial coordinate outside [-L/2, L/2].
class OutOfDomain : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// alpha outside the accepted momentum-correction range.
class InvalidMomentumModel : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Negative flow rate or pressure drop.
class UnsupportedDirection : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Operation not defined for the given tube kind.
class UnsupportedKind : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// Converging-diverging profile with equal (or nearly equal) radii. Use a straight tube.
class DegenerateShape : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature did not reach the requested tolerance within max_depth.
class QuadratureFailure : public Error {
public:
    QuadratureFailure(const std::string& what, double estimate, double error_bound)
        : Error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

}  // namespace capflow
