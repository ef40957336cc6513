#pragma once

#include "eulersum/exact.hpp"
#include "eulersum/precision.hpp"

namespace eulersum {

// The model problem: the factorially divergent power series
//   sum_m (-1)^m m! z^m
// whose Borel-type sum is the Stieltjes integral int_0^inf e^-t/(1+zt) dt,
// defined for z off the cut (-inf, 0].

// Exact coefficient (-1)^m m!.
Int euler_coefficient(unsigned m);

// Partial sum E_n(z) = sum_{v=0}^{n} (-1)^v v! z^v with exact integer
// coefficients, one rounding per coefficient at the ambient precision.
Complex partial_sum(unsigned n, const Complex& z);

// Same sum carried out entirely in the rational field (for exact-arithmetic
// cross checks).
Rational partial_sum_exact(unsigned n, const Rational& z);

// E(z) = int_0^inf e^-t/(1+zt) dt by quadrature; z off (-inf, 0].
Complex euler_integral(const Complex& z, const PrecisionContext& ctx);

// Same function through the exponential integral: (e^{1/z}/z) E_1(1/z).
// Kept as an independent route for identity checks; never calls
// euler_integral.
Complex euler_integral_via_exp_integral(const Complex& z,
                                        const PrecisionContext& ctx);

enum class RemainderRepresentation {
    difference,
    stieltjes_integral,
    laguerre_integral,
    factorial_series,
};

// One evaluation of the truncation remainder R_n = E_n(z) - E(z) through a
// particular representation.  For z > 0 the value has sign (-1)^n: R_0 =
// 1 - E(z) > 0, and each added series term overshoots the other way.
struct RemainderValue {
    unsigned n = 0;
    Complex z;
    Complex value;
    RemainderRepresentation representation = RemainderRepresentation::difference;

    // factorial_series only: magnitude of the final term added, on the
    // normalized scale (value / ((-1)^{n+1} (n+1)! z^{n+1})).  The series
    // converges only polynomially, so callers judge truncation by this.
    Real last_term_magnitude;

    // laguerre_integral only: true when Re(1/z) > 0, the region where the
    // integrand enjoys pointwise exponential decay at t -> 0.
    bool integrand_decay_ok = true;
};

// R_n as the literal difference partial_sum(n,z) - euler_integral(z).
RemainderValue remainder_difference(unsigned n, const Complex& z,
                                    const PrecisionContext& ctx);

// R_n = -(-z)^{n+1} int_0^inf t^{n+1} e^-t/(1+zt) dt.
RemainderValue remainder_stieltjes(unsigned n, const Complex& z,
                                   const PrecisionContext& ctx);

// First-neglected-term bound on |R_n|:
//   (n+1)! |z|^{n+1}                 for |arg z| <= pi/2,
//   (n+1)! |z^{n+1} cosec(arg z)|    for pi/2 < |arg z| < pi.
Real remainder_bound(unsigned n, const Complex& z);

// R_n reconstructed from the finite-interval form: the normalized remainder
//   R_n / ((-1)^{n+1} (n+1)! z^{n+1}) = -(1/z) int_0^1 e^{-(1-t)/(zt)} t^n dt.
RemainderValue remainder_laguerre_integral(unsigned n, const Complex& z,
                                           const PrecisionContext& ctx);

// Truncated factorial series for the normalized remainder,
//   -(1/z) sum_{k=0}^{terms-1} L_k^{(-1)}(1/z) k!/(n+1)_{k+1},
// rescaled back to R_n.  Convergence in `terms` is polynomial; the
// last-term magnitude is reported rather than a convergence guarantee.
RemainderValue remainder_factorial_series(unsigned n, const Complex& z,
                                          unsigned terms,
                                          const PrecisionContext& ctx);

}  // namespace eulersum
