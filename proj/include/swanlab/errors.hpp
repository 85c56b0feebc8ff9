#pragma once

#include <stdexcept>
#include <string>

namespace swanlab {

// Base for everything thrown by the library. Catching this is enough
// to turn any library failure into a CLI diagnostic.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad field/context parameters (non-prime p, reducible modulus, ...).
struct ConfigError : Error {
    using Error::Error;
};

// Witt context requested beyond the supported (p, length) envelope.
struct ContextLimitError : ConfigError {
    using ConfigError::ConfigError;
};

// pth_root applied to an element that is not a p-th power.
struct NotAPthPowerError : Error {
    using Error::Error;
};

// A division by p in the ghost-component recursion was inexact.
// This can only mean an implementation bug; it is checked anyway.
struct IntegralityError : Error {
    using Error::Error;
};

// graded_class / residue extraction asked for a level the form does not reach.
struct NotInFiltrationError : Error {
    using Error::Error;
};

// Normal-form extraction applied to a graded class outside the image
// of the refined-conductor map at that level.
struct NotInImageError : Error {
    using Error::Error;
};

// The modified refined conductor has no definition at (p = 2, level 1).
struct UnsupportedRangeError : Error {
    using Error::Error;
};

// A slope/characteristic-point query outside the hypotheses that make
// the answer well defined.
struct OutOfTheoremRangeError : Error {
    using Error::Error;
};

// Division by zero (or by a non-invertible Laurent element) in the
// expression evaluator.
struct DivisionByZeroError : Error {
    using Error::Error;
};

// Thrown by the convenience conductor accessors when the reduction
// search exhausted its budget and the value is only an upper bound.
// The report-level API returns the bound with a flag instead.
struct ReductionBudgetError : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& what)
        : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace swanlab
