// Moment-sequence and factorial-series toolkit: exact Hankel determinants
// of positive moment sequences, the first-neglected-term truncation bound
// of the attached asymptotic series, and finite factorial-series machinery
// (evaluation, the forward-difference shift identity, and the Mellin-type
// integral representation).
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "eulersum/exact.hpp"
#include "eulersum/precision.hpp"

namespace eulersum {

// Positive moment sequence with exact integer entries: moment(j) = mu_j.
// The divergent alternating series attached to it is sum_j mu_j (-z)^j.
// Entries are kept exact so that determinant checks never touch floating
// point.
struct MomentSequence {
    std::function<Int(unsigned)> moment;
};

// mu_j = j!, the moments of e^{-t} dt on (0, inf) — the sequence behind
// the alternating factorial series summed throughout this library.
MomentSequence euler_moments();

// Truncated factorial series sum_nu b_nu nu!/(z)_{nu+1}, stored as the
// coefficient list b and the argument z.  The infinite series converges
// for Re(z) > 0; any finite truncation is a rational function of z,
// evaluable everywhere off its poles {0, -1, ..., -(len-1)}.
struct FactorialSeries {
    std::vector<Complex> coefficients;
    Complex z;
};

// k x k determinant det[mu_{n+i+j}], 0 <= i,j < k, in exact rational
// arithmetic (fraction-free elimination — no entry is ever rounded).
// By convention the k = 0 determinant is 1 and k = 1 gives mu_n.  For a
// moment sequence of a positive measure every such determinant is
// strictly positive; the exhaustive finite check lives in the tests.
// Accessing a non-positive moment throws parameter_error.
Rational hankel_determinant(const MomentSequence& mu, unsigned k, unsigned n);

// Magnitude of the first neglected term of the moment series truncated
// after order n, with the cosecant amplification outside the right half
// plane:
//   mu_{n+1} |z|^{n+1}                for |arg z| <= pi/2,
//   mu_{n+1} |z|^{n+1} / |sin arg z|  for pi/2 < |arg z| < pi.
// For the Euler moments this reproduces remainder_bound bit for bit.
// Throws cut_error on the cut |arg z| = pi and parameter_error for a
// non-positive moment.
Real stieltjes_truncation_bound(const MomentSequence& mu, unsigned n,
                                const Complex& z);

// Partial sum of the first `terms` factorial-series terms
//   sum_{nu < terms} b_nu nu!/(z)_{nu+1},
// with coefficients past the end of the stored list treated as zero.
// Throws parameter_error for terms < 1 and domain_error when z is a
// nonpositive integer whose Pochhammer factor vanishes inside the
// truncation.
Complex factorial_series_eval(const FactorialSeries& f, unsigned terms,
                              const PrecisionContext& ctx);

// The k-th forward difference in z of n!/(z)_{n+1}, both as the binomial
// sum over shifted arguments and in closed form:
//   lhs = sum_{j=0}^{k} (-1)^{k-j} C(k,j) n!/(z+j)_{n+1},
//   rhs = (-1)^k (n+k)!/(z)_{n+k+1}.
// Returned as the exact rational pair (lhs, rhs); the two agree
// identically.  Throws domain_error when a shifted Pochhammer factor
// vanishes (integer z in [-(n+k), 0]).
std::pair<Rational, Rational> delta_k_factorial_identity(unsigned k,
                                                         unsigned n,
                                                         const Rational& z);

// Mellin-type integral int_0^1 t^{z-1} phi(t) dt of the truncated
// coefficient polynomial phi(t) = sum_nu b_nu (1-t)^nu.  Term by term
// int_0^1 t^{z-1} (1-t)^nu dt = nu!/(z)_{nu+1}, so this reproduces
// factorial_series_eval over the full stored coefficient list.  Requires
// Re(z) > 0 for integrability of the weight at t = 0 (domain_error
// otherwise); the endpoint singularity for Re(z) < 1 is absorbed by the
// double-exponential substitution.
Complex factorial_series_integral_rep(const FactorialSeries& f,
                                      const PrecisionContext& ctx);

}  // namespace eulersum
