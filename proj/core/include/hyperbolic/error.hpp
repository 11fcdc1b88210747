#pragma once

#include <stdexcept>
#include <string>

namespace hyperbolic {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: wrong dimensions, empty grids, bad parameters.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of a function (poles, λ ≤ 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A quadrature or series did not reach its tolerance.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double achieved);
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

// A truncated grid leaves too much mass outside the computed range.
class TruncationError : public Error {
public:
    TruncationError(const std::string& what, double estimate);
    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

// Two independent evaluation routes disagree, or a geometric invariant broke.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace hyperbolic
