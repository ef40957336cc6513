#pragma once

#include <functional>
#include <utility>

#include "eulersum/precision.hpp"

namespace eulersum {

enum class Domain { unit_interval, half_line };

// Integrand callback.  On (0,1) it receives both the node t and 1-t, each
// computed directly from the node transformation without cancellation, so
// factors like exp(-(1-t)/(z t)) stay accurate at both endpoints.  On
// (0,inf) the second argument is always zero and carries no meaning.
using Integrand = std::function<Complex(const Real& t, const Real& one_minus_t)>;

struct QuadratureProblem {
    Integrand integrand;
    Domain domain = Domain::unit_interval;
    // Relative tolerance; a zero value means "use ctx.quad_rel_tol".
    Real target_rel_tol = Real(0);
};

// Double-exponential quadrature: tanh-sinh node transformation on (0,1),
// exp-sinh on (0,inf).  Node/weight tables are cached per (domain,
// precision, refinement level) and shared across calls on the same thread.
// Throws quadrature_error (carrying the achieved relative-error estimate)
// if level refinement stalls before reaching the tolerance.
Complex quad(const QuadratureProblem& p, const PrecisionContext& ctx);

inline QuadratureProblem on_unit_interval(Integrand f, Real tol = Real(0)) {
    return {std::move(f), Domain::unit_interval, std::move(tol)};
}

inline QuadratureProblem on_half_line(std::function<Complex(const Real&)> f,
                                      Real tol = Real(0)) {
    auto wrapped = [g = std::move(f)](const Real& t, const Real&) {
        return g(t);
    };
    return {std::move(wrapped), Domain::half_line, std::move(tol)};
}

}  // namespace eulersum
