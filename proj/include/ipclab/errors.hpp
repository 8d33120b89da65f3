#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ipclab {

// Input outside the mathematical domain of an operation.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation requested for a tail exponent where the quantity is undefined.
struct RegimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A series or moment that is genuinely infinite at the requested point.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative solver failed to reach tolerance; message carries the last bracket.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature exhausted its subdivision budget.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A rejection bound was violated at run time, so the bound is not a bound.
struct EnvelopeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exploration hit the configured vertex cap. Carries the partial count so
// callers can account for the truncated mass instead of dropping it.
struct CapExceeded : std::runtime_error {
    CapExceeded(const std::string& what, std::uint64_t partial_count)
        : std::runtime_error(what), partial(partial_count) {}
    std::uint64_t partial;
};

// Not enough samples for the statistic to mean anything.
struct InsufficientData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unknown suite name, malformed distribution string, bad table file, ...
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The lazy frontier grew past the configured memory budget.
struct MemoryBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ipclab
