#pragma once

#include <stdexcept>

namespace betanum {

/// Base class for domain errors raised by the library.  Internal
/// invariant violations use std::logic_error instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParams : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct NotDivisible : Error {
    using Error::Error;
};

struct NotAdmissible : Error {
    using Error::Error;
};

struct NegativeInput : Error {
    using Error::Error;
};

struct NotABetaInteger : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct UnsupportedParams : Error {
    using Error::Error;
};

/// A materialization or search budget was exhausted before the requested
/// object could be produced.
struct BudgetError : Error {
    using Error::Error;
};

} // namespace betanum
