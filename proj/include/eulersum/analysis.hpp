#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulersum/exact.hpp"
#include "eulersum/precision.hpp"

namespace eulersum {

// Error analysis for the sequence transformations applied to the Euler
// series: observed transformation errors, their closed representations as
// ratios of special functions, the root structure of the effective
// denominators, and the large-order decay laws together with the
// saddle-point machinery behind them.

enum class ErrorMethod { delta, pade, levin_d, drummond };

std::string to_string(ErrorMethod m);
std::optional<ErrorMethod> parse_error_method(const std::string& name);

// One measured data point of a k-sweep: the observed transformation error
// delta_k - E(z) (or its analogue for the other methods), optionally
// accompanied by the closed-form and asymptotic predictions where those
// exist (delta with n = 0, and the Pade rows).
struct ErrorRecord {
    ErrorMethod method = ErrorMethod::delta;
    unsigned k = 0;
    unsigned n = 0;
    Complex z;
    Complex observed;
    std::optional<Complex> closed_form;
    std::optional<Complex> asymptotic;
};

// Observed error of one transformation value against the target integral:
//   delta:    delta_k^(n)(1, E_n(z))            - E(z)
//   levin_d:  d_k^(n)(1, E_n(z))                - E(z)
//   drummond: D_k^(n)(E_n(z))                   - E(z)
//   pade:     [k+n / k](z)                      - E(z)
// The caller picks ctx.digits large enough for the cancellation the
// transformation incurs (about 2k + 30 digits is comfortable).
Complex observed_error(ErrorMethod method, unsigned k, unsigned n,
                       const Complex& z, const PrecisionContext& ctx);

// Shorthand for observed_error(ErrorMethod::delta, ...).
Complex delta_error_direct(unsigned k, unsigned n, const Complex& z,
                           const PrecisionContext& ctx);

// Closed representation of the delta transformation error,
//   delta_k^(n) - E(z) = (-z)^n (n+1)! * I / F,
//   I = int_0^1 t^n e^{-(1-t)/(zt)} 2F1(-k, k+n; n+1; t) dt,
//   F = 2F2(-k, k+n; n+1, n+2; -1/z),
// both hypergeometric factors terminating (degree k).  The integrand decays
// pointwise at t -> 0 only when Re(1/z) > 0 (reported in the flag); on the
// boundary Re(1/z) = 0 the integral still converges conditionally and is
// evaluated through the equivalent real substitution u = (1-t)/t with an
// explicit integration-by-parts tail.  For Re(1/z) < 0 the representation
// diverges and quadrature_error is thrown.
struct DeltaErrorClosed {
    unsigned k = 0;
    unsigned n = 0;
    Complex z;
    Complex value;     // (-z)^n (n+1)! integral / hyp2f2
    Complex integral;  // I above
    Complex hyp2f2;    // F above
    bool integrand_decay_ok = true;  // Re(1/z) > 0
};
DeltaErrorClosed delta_error_closed(unsigned k, unsigned n, const Complex& z,
                                    const PrecisionContext& ctx);

// The terminating 2F2(-k, k+n; n+1, n+2; -1/z) as a degree-k polynomial in
// w = 1/z.  All coefficients are positive rationals, so every zero lies off
// [0, inf); numerically all zeros come out real and negative, mirroring the
// cut of the function the transformation approximates.  Roots are computed
// as companion-matrix eigenvalues at twice the requested precision; a root
// counts as real negative when |Im w| <= 10^(-digits/2) and Re w < 0.
struct DenominatorPolynomial {
    unsigned k = 0;
    unsigned n = 0;
    std::vector<Rational> coefficients;  // ascending in w = 1/z, exact
    std::vector<Complex> zeros_w;        // roots in w, sorted by real part
    std::vector<Complex> zeros_z;        // z = 1/w for each root
    unsigned real_negative_count = 0;
};
DenominatorPolynomial delta_denominator_poly(unsigned k, unsigned n,
                                             const PrecisionContext& ctx);

// Roots of a polynomial given by ascending complex coefficients, via the
// companion matrix and a shifted Hessenberg QR iteration run at the given
// working precision.  Throws parameter_error for a vanishing leading
// coefficient and breakdown_error if the iteration fails to converge.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& ascending,
                                      unsigned digits);

// Large-k decay law of the delta error at fixed z (principal branches):
//   (4 pi / z) e^{1/z} exp(-(9/2) k^{2/3} / z^{1/3})
//       * cos(3^{3/2} k^{2/3} / (2 z^{1/3}) + pi/6).
// The k^{2/3} exponent is the hallmark; the cosine factor produces the
// sign-change pattern observed on the real axis.
Complex delta_error_asymptotic(unsigned k, const Complex& z,
                               const PrecisionContext& ctx);

// Large-k form of the normalized numerator integral
//   J = int_{-1}^{1} exp(-(2/z)/(1+x)) 2F1(-k, k; 1; (1+x)/2) dx
//     = 2 e^{-1/z} I|_{n=0}   (exact change of variables x = 2t - 1):
//   4 / (3^{1/2} z^{1/3} k^{4/3})
//       * exp(-1/(3z) - (3/2) k^{2/3} / z^{1/3})
//       * cos(3^{3/2} k^{2/3} / (2 z^{1/3}) + pi/6).
// Note the normalization: this approximates J, i.e. 2 e^{-1/z} times the
// integral field of delta_error_closed at n = 0.
Complex delta_numerator_asymptotic(unsigned k, const Complex& z,
                                   const PrecisionContext& ctx);

// Large-k form of the denominator 2F2(-k, k; 1, 2; -1/z):
//   (z / k^2)^{2/3} / (2 pi 3^{1/2}) * exp(3 k^{2/3} / z^{1/3} - 1/(3z)).
// Combining the three: error_asym = (1/2) e^{1/z} * numerator_asym /
// denominator_asym holds exactly as an identity of the formulas.
Complex delta_denominator_asymptotic(unsigned k, const Complex& z,
                                     const PrecisionContext& ctx);

// Saddle-point data for the phase function behind the numerator law:
//   f(tau) = (3/2) log tau - alpha tau^2 + 2 i k arctan tau,  alpha = 1/z,
// arising from J after the substitution x = (1 - tau^2)/(1 + tau^2) and a
// steepest-descent treatment.  tau0 is the dominant saddle (the principal
// cube root (i k / alpha)^{1/3}, leading order), tau3 = 3i/(4k) the small
// companion root of the quartic saddle equation
//   4 alpha tau^4 + (4 alpha - 3) tau^2 - 4 i k tau + 3 = 0.
struct SaddleData {
    Complex tau0;
    Complex tau3;
    Complex f0;         // f(tau0)
    Complex f0_second;  // f''(tau0) = -3/(2 tau0^2) - 2 alpha
                        //             - 4 i k tau0 / (1 + tau0^2)^2
    Complex g0;         // amplitude factor 1/(1 + tau0^2)^2 at the saddle
};
SaddleData delta_saddle_data(unsigned k, const Complex& z,
                             const PrecisionContext& ctx);

// The stationary-phase evaluation of J assembled directly from SaddleData,
//   4 (-1)^k sqrt(2/k) e^{-alpha}
//       * Re{ e^{i pi/4} g0 e^{f0} (-f0'')^{-1/2} },
// valid for real z > 0 (the conjugate saddle supplies the real part).
// Agrees with delta_numerator_asymptotic to leading order in k.
Real delta_numerator_saddle_form(unsigned k, const Real& z,
                                 const PrecisionContext& ctx);

// Oscillatory large-k form of the terminating 2F1 on the support interval,
//   2F1(-k, k; 1; (1+x)/2) ~ (-1)^k / sqrt(pi k)
//       * ((1-x)/(1+x))^{1/4} cos(k arccos x + pi/4),   -1 < x < 1.
// Throws domain_error for |x| >= 1 (the form degenerates at the endpoints).
Real hyp2f1_oscillatory_asym(unsigned k, const Real& x,
                             const PrecisionContext& ctx);

// Closed representation of the Pade error,
//   [k+n / k](z) - E(z) = (-z)^n (k+1)_{n+1} * k! U(k+1, -n, 1/z)
//                           / L_k^{(n+1)}(-1/z),
// with the confluent U factor evaluated through its integral representation
// and the generalized Laguerre denominator summed directly.  Throws
// breakdown_error when the Laguerre value is degenerate (below the modulus
// floor against its own term scale).
Complex pade_error_closed(unsigned k, unsigned n, const Complex& z,
                          const PrecisionContext& ctx);

// Large-k decay law of the Pade error at fixed z (principal branches):
//   (-1)^n (2 pi / z) e^{1/z} exp(-4 k^{1/2} / z^{1/2}).
// Monotone in k (no oscillation) with the k^{1/2} exponent -- slower than
// the k^{2/3} law of the delta transformation.
Complex pade_error_asymptotic(unsigned k, unsigned n, const Complex& z,
                              const PrecisionContext& ctx);

// Side-by-side k-sweep of delta against Pade at n = 0: the inequality
// |delta error| < |pade error| for every k >= k_threshold, the envelope
// maxima of the oscillating delta error, and the decay exponents of both
// methods measured after removing the known amplitude constants:
// regressing log(-log(|error| / A)) on log k estimates the exponent nu in
// |error| ~ A exp(-c k^nu) without assuming c.  The delta exponent is fit
// on the envelope maxima (the raw sequence dips through zero), the Pade
// exponent on raw k restricted to [max(k_min,10), min(k_max,60)], where
// the law is past its preasymptotic bend but far from the noise floor.
struct SuperiorityReport {
    Complex z;
    unsigned k_min = 1;
    unsigned k_max = 1;
    unsigned k_threshold = 3;
    std::vector<Complex> delta_errors;  // index i holds k = k_min + i
    std::vector<Complex> pade_errors;
    unsigned violations = 0;   // k in [max(k_min,k_threshold), k_max]
                               // with |delta| >= |pade|
    Real worst_ratio;          // max |delta|/|pade| over the same range
    std::vector<unsigned> envelope_k;  // interior local maxima of |delta|
    Real delta_slope;          // envelope exponent estimate (target 2/3)
    Real pade_slope;           // raw-k exponent estimate (target 1/2)
    bool slopes_valid = false;  // both fits had at least four points
};
SuperiorityReport superiority_check(const Complex& z, unsigned k_min,
                                    unsigned k_max, unsigned k_threshold,
                                    const PrecisionContext& ctx);

}  // namespace eulersum
