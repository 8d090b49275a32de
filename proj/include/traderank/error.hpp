#pragma once

#include <stdexcept>
#include <string>

namespace traderank {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or unusable input data (CLI exit code 2).
class InputError : public Error {
public:
    using Error::Error;
};

/// An iterative or dense numerical routine failed (CLI exit code 3).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Power iteration hit its iteration cap before reaching the tolerance.
class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& what, double residual, int iterations)
        : NumericalError(what), residual_(residual), iterations_(iterations) {}

    double residual() const noexcept { return residual_; }
    int iterations() const noexcept { return iterations_; }

private:
    double residual_;
    int iterations_;
};

}  // namespace traderank
