#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace octcode {

/// Base of every error the library throws. `kind()` is a stable machine-readable tag.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    [[nodiscard]] virtual const char* kind() const noexcept = 0;
};

/// Operands of mismatched length or shape.
class DimensionError : public Error {
public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "dimension"; }
};

/// Malformed text input (vectors, matrices, family specs).
class ParseError : public Error {
public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "parse"; }
};

/// Well-formed input that violates a parameter constraint.
class ParameterError : public Error {
public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "parameter"; }
};

/// An oracle refused to run because its cost exceeds the configured budget.
class BudgetError : public Error {
public:
    BudgetError(const std::string& what, double estimated_cost, double limit)
        : Error(what), estimated_cost_(estimated_cost), limit_(limit) {}
    [[nodiscard]] const char* kind() const noexcept override { return "budget"; }
    [[nodiscard]] double estimated_cost() const noexcept { return estimated_cost_; }
    [[nodiscard]] double limit() const noexcept { return limit_; }

private:
    double estimated_cost_;
    double limit_;
};

/// Internal cross-check failed. Never expected; signals a bug.
class ConsistencyError : public Error {
public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "consistency"; }
};

}  // namespace octcode
