#pragma once

#include <stdexcept>
#include <string>

namespace ringterm {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

// A coefficient does not fit in [0, base) during Kronecker encoding.
struct CoefficientOutOfRange : Error {
    using Error::Error;
};

// The evaluation base is too small for lossless coefficient extraction.
struct InvalidBase : Error {
    using Error::Error;
};

// A named hypothesis of a checked identity does not hold for the given input.
struct PreconditionViolated : Error {
    explicit PreconditionViolated(std::string which)
        : Error("precondition violated: " + which), hypothesis(std::move(which)) {}
    std::string hypothesis;
};

// The integer-side and polynomial-side computations disagree even though all
// hypotheses were checked. Indicates a bug, never expected at runtime.
struct TheoremMismatch : Error {
    using Error::Error;
};

struct UnsupportedInitials : Error {
    using Error::Error;
};

struct UnsupportedCoefficients : Error {
    using Error::Error;
};

struct DegenerateModulus : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    explicit DivisionByZero(std::string path = "")
        : Error(path.empty() ? "division by zero" : "division by zero at " + path),
          node_path(std::move(path)) {}
    std::string node_path;
};

struct ModulusNotPositive : Error {
    using Error::Error;
};

struct PerfectPower : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

} // namespace ringterm
