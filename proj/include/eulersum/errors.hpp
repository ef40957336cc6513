#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace eulersum {

// Common base so callers can catch every library failure with one handler.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration, e.g. a working precision below the supported floor.
struct config_error : error {
    using error::error;
};

// Argument outside a function's mathematical domain.
struct domain_error : error {
    using error::error;
};

// Evaluation requested on a branch cut, where the function is undefined.
struct cut_error : error {
    using error::error;
};

// Parameter set violates a structural requirement, e.g. a denominator
// Pochhammer symbol vanishing inside the range of a terminating sum.
struct parameter_error : error {
    using error::error;
};

// Quadrature stopped before reaching the target tolerance.  Carries the
// achieved relative-error estimate as a decimal string.
struct quadrature_error : error {
    quadrature_error(const std::string& what, std::string achieved)
        : error(what), achieved_rel_error(std::move(achieved)) {}

    std::string achieved_rel_error;
};

// Numerical breakdown inside a sequence transformation (a vanishing
// difference or weight that the scheme must divide by).
struct breakdown_error : error {
    using error::error;
};

}  // namespace eulersum
