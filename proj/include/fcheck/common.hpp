#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fcheck {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A function returned a non-finite value at a quadrature node.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& what, double node)
        : Error(what), node_(node) {}
    double node() const noexcept { return node_; }

private:
    double node_;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Argument outside a size or radius bound.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A check needs a capability (e.g. a closed-form kernel derivative) the
/// transform does not provide.
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// Normalization witness whose reference value vanishes.
class WitnessRejected : public Error {
public:
    using Error::Error;
};

/// Malformed descriptor, expression or configuration; carries the 0-based
/// column of the offending character when there is one.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// e^{-2 pi i t}, with t reduced mod 1 first so large arguments keep their
/// accuracy.
inline Complex unit_phase(double t) {
    const double frac = t - std::floor(t);
    return std::polar(1.0, -2.0 * kPi * frac);
}

} // namespace fcheck
