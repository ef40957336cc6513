#pragma once

#include <vector>

#include "eulersum/precision.hpp"
#include "eulersum/quadrature.hpp"

namespace eulersum {

// Generalized Laguerre polynomial L_k^(alpha)(x) by the standard three-term
// recurrence in the degree:
//   (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1},
//   L_0 = 1,  L_1 = 1+alpha-x.
Complex laguerre(unsigned k, const Real& alpha, const Complex& x);
Real laguerre(unsigned k, const Real& alpha, const Real& x);

// A hypergeometric series forced to terminate by its first numerator
// parameter, which must be a nonpositive integer -k: the sum has exactly
// k+1 terms.  No denominator parameter may be an integer in [-k, 0], or a
// Pochhammer factor vanishes inside the range.
struct TerminatingHyp {
    std::vector<Complex> numerator_params;
    std::vector<Complex> denominator_params;
    Complex argument;
};

// Direct evaluation of the finite sum
//   sum_{j=0}^{k} prod_i (a_i)_j / prod_i (b_i)_j * x^j / j!
// by exact term-ratio recursion (no general pFq machinery).
Complex hyp_terminating(const TerminatingHyp& h);

// k! * U(k+1, -n, 1/z) for the confluent U family appearing in the closed
// Pade error form, computed as z^{k+1} int_0^inf xi^k e^-xi (1+z xi)^-(k+n+2) dxi.
// z must stay off the cut (-inf, 0], where the integrand has a pole on the
// path of integration.
Complex kummer_u_scaled(unsigned k, unsigned n, const Complex& z,
                        const PrecisionContext& ctx);

// Exponential integral E_1(x), x off the cut (-inf, 0].  Convergent series
//   E_1(x) = -gamma - ln x + sum_{m>=1} (-1)^{m+1} x^m / (m m!)
// for |x| <= 1, quadrature of e^-x int_0^inf e^-s/(s+x) ds otherwise.
Complex exp_integral_e1(const Complex& x, const PrecisionContext& ctx);

enum class LaguerreAsymMode {
    fejer,          // oscillatory regime, x > 0 real
    perron,         // exponential regime, x off (0, inf)
    interpolating,  // two-exponential form, |arg(2 sqrt(n x))| < pi
};

// Leading-order large-degree approximation of L_n^(alpha)(x) in the chosen
// regime (the O(n^-1/2) correction is dropped).
Complex laguerre_asymptotic(LaguerreAsymMode mode, unsigned n,
                            const Real& alpha, const Complex& x);

}  // namespace eulersum
