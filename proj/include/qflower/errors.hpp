#pragma once
// errors.hpp — exception types shared across the workbench.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qflower {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid parameters for an operation (t > n, cycle(2), ...).
struct DomainError : Error {
    using Error::Error;
};

// Graph order over the library cap.
struct CapacityError : Error {
    using Error::Error;
};

// Operation not supported at this size without an explicit budget.
struct CapabilityError : Error {
    using Error::Error;
};

// graph6 decode failure; `offset` is the byte offset into the input line.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t at) : Error(what), offset(at) {}
};

// A budgeted search ran out of node expansions where a definite answer was required.
struct BudgetExceededError : Error {
    using Error::Error;
};

// Eigensolver failed to reach the requested residual within the iteration cap.
// Carries the best estimate so callers can still inspect it.
struct ConvergenceError : Error {
    double best_value;
    double residual;
    std::uint64_t iterations;
    ConvergenceError(const std::string& what, double value, double resid, std::uint64_t iters)
        : Error(what), best_value(value), residual(resid), iterations(iters) {}
};

}  // namespace qflower
