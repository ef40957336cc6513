#pragma once

#include <string>
#include <vector>

#include "eulersum/exact.hpp"
#include "eulersum/precision.hpp"
#include "eulersum/transforms.hpp"

namespace eulersum {

// Pade approximants [m/n] to the factorially divergent model series
// sum_m (-1)^m m! z^m, which is a Stieltjes series: its approximants obey a
// rigid order structure on the positive real axis, and the staircase rows
// [k+j/k] with j >= -1 converge to the Stieltjes integral for z off the cut.
//
// Three independent routes to the same values are kept deliberately
// separate so they can certify one another:
//   - a closed form as the ratio of two finite sums (no linear algebra),
//   - an exact determinant representation over the integer coefficients,
//   - the even columns of the epsilon algorithm (transforms.hpp).

// Numerator / denominator degrees of one approximant [m/n].
struct PadeIndex {
    unsigned m = 0;  // numerator degree
    unsigned n = 0;  // denominator degree
};

// The entries that sum the series: [k+j/k] with j >= -1.  Throws
// parameter_error when j < -1 or k + j < 0.
PadeIndex staircase_index(unsigned k, long j);

// [k+n/k](z) as the ratio of two (k+1)-term sums with all-positive weights
// w_j = C(k,j) z^{k-j} / (n+j+1)!:
//
//     sum_j w_j * (partial sum through order n+j)  /  sum_j w_j .
//
// Valid for n >= -1; the n = -1 row pairs the j = 0 weight with the empty
// partial sum.  For real z > 0 every weight is positive, so the denominator
// cannot cancel; the numerator inherits the cancellation intrinsic to
// summing a divergent series, which working precision must absorb.
// Throws parameter_error for z = 0 (the weight scaling degenerates) or
// n < -1.
Complex pade_euler_closed_form(unsigned k, long n, const Complex& z,
                               const PrecisionContext& ctx);

// The same value carried out entirely in the rational field.
Rational pade_euler_closed_form_exact(unsigned k, long n, const Rational& z);

// Exact rational coefficients (ascending powers of z) of the two closed-form
// polynomials before any normalization: the denominator's z^{k-j}
// coefficient is C(k,j)/(n+j+1)!, and the numerator is the corresponding
// weighted combination of truncated series.  deg num = k+n (k-1 when
// n = -1), deg den = k.  The denominator is proportional to
// z^k L_k^{(n+1)}(-1/z), a scaled generalized Laguerre polynomial, which is
// what pins every pole to the negative real axis, simple.
struct ClosedFormPolynomials {
    std::vector<Rational> numerator;
    std::vector<Rational> denominator;
};
ClosedFormPolynomials pade_euler_closed_form_polynomials(unsigned k, long n);

// [m/n](z) as a ratio of two (n+1) x (n+1) determinants: both share n rows
// that slide along the exact integer series coefficients
// gamma_{m-n+1} ... gamma_{m+n}; the last row holds tail-truncated partial
// sums (numerator) or the monomials z^n ... 1 (denominator).  Evaluated in
// exact rational arithmetic with fraction-free elimination -- no rounding
// anywhere -- so it serves as a bit-exact oracle for the other routes.
// Intended for small orders only.
//   pre:  m >= n-1 (no coefficient index goes negative), m + n <= 16
//   errors: parameter_error on a precondition violation; breakdown_error
//           when the denominator determinant vanishes (degenerate table).
Rational pade_determinant_oracle(const PadeIndex& idx, const Rational& z);

enum class InequalityStatus { holds, fails, inconclusive };

struct InequalityCheck {
    std::string family;  // which order relation (see list below)
    unsigned m = 0;      // base index within the family
    long j = 0;          // diagonal offset, 0 when the family has none
    Real margin;         // quantity the theory requires to be >= 0
    InequalityStatus status = InequalityStatus::holds;
    bool exact = false;  // margin certified in exact rational arithmetic
};

struct StieltjesReport {
    Real z;
    unsigned depth = 0;
    std::vector<InequalityCheck> checks;
    unsigned failed = 0;
    unsigned inconclusive = 0;

    bool all_hold() const { return failed == 0 && inconclusive == 0; }
};

// Certification battery for the order relations a Stieltjes function imposes
// on its Pade table, evaluated at real z > 0 for every m <= depth and
// diagonal offset j in {-1, 0, 1, 2} (rows whose indices would go negative
// are skipped):
//
//   diagonal_step       (-1)^{j+1} ([m+j+1/m+1] - [m+j/m]) >= 0
//   cross_step          (-1)^{j+1} ([m+j/m] - [m+j+1/m-1]) >= 0
//   function_bracket    [m/m] >= E(z) >= [m-1/m]
//   off_diagonal_pair   [m/m+1] >= [m+1/m]
//   staircase_bracket   [m+1/m] <= E(z) <= [m+1/m+1]
//
// Approximant-vs-approximant margins are computed in exact rational
// arithmetic (a binary floating-point z is exactly a dyadic rational), so
// their signs are certain and `exact` is set.  Margins against the integral
// E(z) itself go through quadrature; a margin whose magnitude falls below
// 10^(20-digits) is reported inconclusive rather than forced into
// pass/fail.  Bracket families appear as two entries with suffixes _upper
// (the overestimate side) and _lower.  Throws domain_error unless z > 0.
StieltjesReport check_stieltjes_inequalities(const Real& z, unsigned depth,
                                             const PrecisionContext& ctx);

// Long-division Taylor check in exact rational arithmetic: expands
// num(z)/den(z) about z = 0 and compares the coefficients of z^0 .. z^order
// against the exact series coefficients (-1)^i i!.  True when every
// compared coefficient matches exactly.  A genuine [m/n] approximant
// matches through order m+n; the Levin-type rational forms with numerator
// degree k+n and denominator degree k match through order k+n+1 only.
//   pre:  order <= deg(num) + deg(den) + 1
//   errors: breakdown_error when den's constant term is zero (non-normal
//           approximant); parameter_error on empty input or excessive order.
bool accuracy_through_order_check(const std::vector<Rational>& num,
                                  const std::vector<Rational>& den,
                                  unsigned order);

// The same check for a floating-point rational approximant.  Its stored
// coefficients carry one rounding each from their construction, so the
// expansion runs at the context precision and each coefficient must match
// within 10^(18-digits) * max(1, |gamma_i|) instead of exactly.
bool accuracy_through_order_check(const RationalApproximant& r, unsigned order,
                                  const PrecisionContext& ctx);

// Copy of r rescaled so the denominator's constant term equals exactly 1,
// the conventional normalization that fixes the common scalar freedom in a
// numerator/denominator pair.  The represented value is unchanged.  Throws
// breakdown_error when that term is zero (non-normal approximant).
RationalApproximant baker_normalized(const RationalApproximant& r,
                                     const PrecisionContext& ctx);

}  // namespace eulersum
