#pragma once

#include <stdexcept>
#include <string>

namespace localpn {

// Bad mathematical input that the caller could have validated:
// coincident or zero weights, wrong specialization, non-simple roots.
struct DegeneracyError : std::runtime_error {
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

// A z-layer of the recursion asked for the antiderivative of a series
// with nonzero constant term; indicates a convention bug, not bad data.
struct NonIntegrableError : std::runtime_error {
    explicit NonIntegrableError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed command line / config.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace localpn
