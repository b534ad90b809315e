#pragma once

#include <stdexcept>
#include <string>

namespace shc {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: schema violations, bad literals, unknown names.
class InputError : public Error {
public:
    using Error::Error;
};

/// Dimension mismatch, index out of range, wrong degree.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A basis would exceed the configured size cap.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::string dimension)
        : Error(what), dimension_(std::move(dimension))
    {
    }

    /// Exact decimal value of the offending dimension.
    const std::string& dimension() const { return dimension_; }

private:
    std::string dimension_;
};

}  // namespace shc
