#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulersum/quadrature.hpp"

using namespace eulersum;

namespace {

// Reference value of int_0^inf e^-t/(1+t) dt to 50 digits.
const char* kEulerAtOne =
    "0.59634736232319407434107849936927937607417786015255";

}  // namespace

TEST_CASE("half-line: unit integral of e^-t") {
    PrecisionContext ctx = make_context(60);
    ScopedPrecision guard(60);
    Complex v = quad(on_half_line([](const Real& t) {
                         return Complex(exp(-t));
                     }),
                     ctx);
    CHECK(abs(v.re - 1) < pow(Real(10), -50));
    CHECK(v.im == 0);
}

TEST_CASE("unit interval: monomials integrate to 1/(n+1)") {
    PrecisionContext ctx = make_context(50);
    ScopedPrecision guard(50);
    const Real tol = pow(Real(10), -40);
    for (int n : {0, 1, 2, 5, 10}) {
        Complex v = quad(on_unit_interval([n](const Real& t, const Real&) {
                             return Complex(pow(t, n));
                         }),
                         ctx);
        CHECK(abs(v.re - Real(1) / (n + 1)) < tol);
    }
}

TEST_CASE("half-line: Stieltjes integral at z=1 matches reference") {
    PrecisionContext ctx = make_context(60);
    ScopedPrecision guard(60);
    Complex v = quad(on_half_line([](const Real& t) {
                         return Complex(exp(-t) / (1 + t));
                     }),
                     ctx);
    CHECK(abs(v.re - Real(kEulerAtOne)) < pow(Real(10), -49));
}

TEST_CASE("cancellation-free 1-t argument near the right endpoint") {
    // int_0^1 (1-t)^20 dt = 1/21.  Forming 1-t from t loses all accuracy
    // once t is within 10^-digits of 1, so the second argument must be used.
    PrecisionContext ctx = make_context(60);
    ScopedPrecision guard(60);
    Complex v = quad(on_unit_interval([](const Real&, const Real& omt) {
                         return Complex(pow(omt, 20));
                     }),
                     ctx);
    CHECK(abs(v.re - Real(1) / 21) < pow(Real(10), -50));
}

TEST_CASE("flat-zero integrand at the left endpoint") {
    // f(t) = exp(-(1-t)/t) has all derivatives zero at t=0; the node
    // transformation handles it without special casing.  Substituting
    // t = 1/(1+u) turns the integral into int_0^inf e^-u (1+u)^-2 du,
    // which integration by parts reduces to 1 - int_0^inf e^-u/(1+u) du.
    // Doubling check on top: values at 40 and 80 digits must agree.
    auto run = [](unsigned digits) {
        PrecisionContext ctx = make_context(digits);
        ScopedPrecision guard(digits);
        return quad(on_unit_interval([](const Real& t, const Real& omt) {
                        return Complex(exp(-omt / t));
                    }),
                    ctx);
    };
    Complex lo = run(40);
    Complex hi = run(80);
    ScopedPrecision guard(80);
    CHECK(abs(lo - hi) < pow(Real(10), -30) * abs(hi));
    CHECK(abs(hi.re - (1 - Real(kEulerAtOne))) < pow(Real(10), -49));
}

TEST_CASE("complex integrand on the unit interval") {
    // int_0^1 e^{iat} dt = (e^{ia}-1)/(ia).
    PrecisionContext ctx = make_context(50);
    ScopedPrecision guard(50);
    const Real a = 3;
    Complex v = quad(on_unit_interval([&a](const Real& t, const Real&) {
                         return exp(Complex(Real(0), a * t));
                     }),
                     ctx);
    Complex expected = (exp(Complex(Real(0), a)) - Complex(Real(1))) /
                       Complex(Real(0), a);
    CHECK(abs(v - expected) < pow(Real(10), -40));
}

TEST_CASE("tightened per-problem tolerance is honored") {
    PrecisionContext ctx = make_context(80);
    ScopedPrecision guard(80);
    QuadratureProblem p = on_half_line(
        [](const Real& t) { return Complex(exp(-t)); }, pow(Real(10), -60));
    Complex v = quad(p, ctx);
    CHECK(abs(v.re - 1) < pow(Real(10), -60));
}

TEST_CASE("non-integrable pole raises quadrature failure") {
    PrecisionContext ctx = make_context(40);
    ScopedPrecision guard(40);
    // 1/(t - 1/e) has a non-integrable singularity inside (0,1): level
    // refinement can never settle.
    const Real c = exp(Real(-1));
    QuadratureProblem p = on_unit_interval(
        [&c](const Real& t, const Real&) { return Complex(1 / (t - c)); });
    CHECK_THROWS_AS(quad(p, ctx), quadrature_error);
}
