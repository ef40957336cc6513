#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "eulersum/euler_series.hpp"
#include "eulersum/specfun.hpp"

using namespace eulersum;

namespace {

const char* kEulerAtOne =
    "0.59634736232319407434107849936927937607417786015255";
const char* kEulerAtHalf =
    "0.7226572337764451693943233153574798779091812830946";
const char* kEulerAtTen =
    "0.20146425447084516791000581535755200117369484144566";

}  // namespace

TEST_CASE("exact coefficients and partial sums") {
    ScopedPrecision guard(50);
    CHECK(euler_coefficient(0) == 1);
    CHECK(euler_coefficient(1) == -1);
    CHECK(euler_coefficient(4) == 24);
    CHECK(euler_coefficient(5) == -120);

    CHECK(partial_sum(0, Complex(Real(7))) == Complex(Real(1)));
    CHECK(partial_sum(2, Complex(Real(1))) == Complex(Real(2)));
    // 1 - 10 + 200 - 6000, evaluated in exact integer arithmetic.
    CHECK(partial_sum(3, Complex(Real(10))) == Complex(Real(-5809)));

    CHECK(partial_sum_exact(3, Rational(10)) == -5809);
    CHECK(partial_sum_exact(2, Rational(1, 2)) == 1);  // 1 - 1/2 + 2/4
    // Rational and floating paths agree.
    Real via_exact = to_real(partial_sum_exact(8, Rational(1, 3)), 50);
    Complex via_float = partial_sum(8, Complex(Real(1) / 3));
    CHECK(abs(via_float.re - via_exact) < pow(Real(10), -45));
}

TEST_CASE("euler integral reference values and small-z normalization") {
    PrecisionContext ctx = make_context(60);
    ScopedPrecision guard(60);
    const Real tol = pow(Real(10), -48);

    CHECK(abs(euler_integral(Complex(Real(1)), ctx).re - Real(kEulerAtOne)) <
          tol);
    CHECK(abs(euler_integral(Complex(Real(1) / 2), ctx).re -
              Real(kEulerAtHalf)) < tol);
    CHECK(abs(euler_integral(Complex(Real(10)), ctx).re - Real(kEulerAtTen)) <
          tol);

    // E(z) = 1 - z + O(z^2) as z -> 0+.
    const Real small = pow(Real(10), -6);
    Complex v = euler_integral(Complex(small), ctx);
    CHECK(abs(v.re - (1 - small)) < 3 * small * small);

    CHECK_THROWS_AS(euler_integral(Complex(Real(-1)), ctx), cut_error);
}

TEST_CASE("two independent routes to the euler integral agree") {
    PrecisionContext ctx = make_context(60);
    ScopedPrecision guard(60);
    const Real tol = pow(Real(10), -45);
    std::vector<Complex> zs = {Complex(Real(1)), Complex(Real(10)),
                               Complex(Real(1) / 2),
                               from_polar(Real(10), const_pi() / 2),
                               from_polar(Real(10), 3 * const_pi() / 4)};
    for (const Complex& z : zs) {
        Complex direct = euler_integral(z, ctx);
        Complex via_e1 = euler_integral_via_exp_integral(z, ctx);
        CHECK(abs(direct - via_e1) < tol * abs(direct));
    }
}

TEST_CASE("remainder representations: identities and signs") {
    PrecisionContext ctx = make_context(60);
    ScopedPrecision guard(60);
    const Real tol = pow(Real(10), -45);

    // remainder_difference(0, 1) = 1 - E(1).
    RemainderValue r01 = remainder_difference(0, Complex(Real(1)), ctx);
    CHECK(abs(r01.value.re - (1 - Real(kEulerAtOne))) < tol);

    std::vector<Complex> zs = {Complex(Real(1) / 2), Complex(Real(1)),
                               Complex(Real(10)),
                               from_polar(Real(10), 3 * const_pi() / 4)};
    for (const Complex& z : zs) {
        // The finite-interval route needs Re(1/z) > 0 for an integrable
        // integrand; it is checked separately below.
        const bool decay = (Complex(Real(1)) / z).re > 0;
        for (unsigned n = 0; n <= 10; n += 2) {
            RemainderValue d = remainder_difference(n, z, ctx);
            RemainderValue s = remainder_stieltjes(n, z, ctx);
            const Real scale = abs(s.value);
            CHECK(abs(d.value - s.value) < tol * scale);
            if (decay) {
                RemainderValue l = remainder_laguerre_integral(n, z, ctx);
                CHECK(abs(l.value - s.value) < tol * scale);
            }
        }
    }

    // Sign alternation (-1)^n on the positive axis: R_0 > 0, R_1 < 0, ...
    for (unsigned n = 0; n <= 7; ++n) {
        RemainderValue s = remainder_stieltjes(n, Complex(Real(1)), ctx);
        CHECK(s.value.im == 0);
        if (n % 2 == 0) {
            CHECK(s.value.re > 0);
        } else {
            CHECK(s.value.re < 0);
        }
    }
}

TEST_CASE("first-term bound dominates the remainder") {
    PrecisionContext ctx = make_context(50);
    ScopedPrecision guard(50);

    CHECK(remainder_bound(0, Complex(Real(1))) == 1);
    CHECK(remainder_bound(2, Complex(Real(10))) == 6000);
    // Oblique branch: 10 / sin(3pi/4) = 10 sqrt(2).
    Real oblique = remainder_bound(0, from_polar(Real(10), 3 * const_pi() / 4));
    CHECK(abs(oblique - 10 * sqrt(Real(2))) < pow(Real(10), -45));
    CHECK_THROWS_AS(remainder_bound(1, Complex(Real(-3))), cut_error);

    for (double mod : {0.5, 1.0, 10.0}) {
        for (double frac : {0.0, 0.25, -0.25, 0.5, -0.5, 0.75, -0.75}) {
            Complex z = from_polar(Real(mod), frac * const_pi());
            for (unsigned n = 0; n <= 15; n += 3) {
                RemainderValue s = remainder_stieltjes(n, z, ctx);
                CHECK(abs(s.value) <= remainder_bound(n, z));
            }
        }
    }
}

TEST_CASE("laguerre-integral representation details") {
    PrecisionContext ctx = make_context(50);
    ScopedPrecision guard(50);

    // Decay flag tracks Re(1/z); still true off the axis while Re(1/z) > 0,
    // where the identity continues to hold.
    CHECK(remainder_laguerre_integral(0, Complex(Real(10)), ctx)
              .integrand_decay_ok);
    Complex quarter = from_polar(Real(10), const_pi() / 4);
    RemainderValue lq = remainder_laguerre_integral(2, quarter, ctx);
    RemainderValue sq = remainder_stieltjes(2, quarter, ctx);
    CHECK(lq.integrand_decay_ok);
    CHECK(abs(lq.value - sq.value) < pow(Real(10), -40) * abs(sq.value));

    // Past arg z = pi/2, Re(1/z) < 0: the integrand grows like
    // e^{|Re(1/z)|/t} at t -> 0, the integral diverges, and quadrature
    // reports failure instead of a silent wrong number.
    Complex oblique = from_polar(Real(10), 3 * const_pi() / 4);
    CHECK_THROWS_AS(remainder_laguerre_integral(2, oblique, ctx),
                    quadrature_error);

    // n=0, z -> infinity: normalized integral tends to int_0^1 dt = 1, so
    // R_0 ~ -scale/z = +|z| * 1!...: check through the normalized form.
    const Complex zbig(Real(100000));
    RemainderValue big = remainder_laguerre_integral(0, zbig, ctx);
    // value = (-1)^{1} 1! z * (-1/z) * integral = integral -> 1 as z->inf.
    CHECK(abs(big.value.re - 1) < Real("0.001"));
}

TEST_CASE("factorial series converges polynomially with measured budgets") {
    PrecisionContext ctx = make_context(50);
    ScopedPrecision guard(50);
    const Complex z(Real(10));

    // Leading normalized term is -1/(z(n+1)).
    RemainderValue one = remainder_factorial_series(3, z, 1, ctx);
    // value = (-1)^{n+1} (n+1)! z^{n+1} * (-1/(z(n+1))); at n=3 the sign
    // factor is +1, so invert the positive scale to recover the term.
    Complex scale = Complex(Real(factorial_exact(4))) *
                    principal_power(z, Real(4));
    Complex normalized = one.value / scale;
    CHECK(abs(normalized - Complex(Real(-1) / 40)) < pow(Real(10), -45));
    CHECK(abs(one.last_term_magnitude - Real(1) / 40) < pow(Real(10), -45));

    // Measured convergence at z=10 (normalized scale):
    //   n=0, 120 terms: |err| ~ 2.2e-4;  n=1, 10^4 terms: ~9.5e-11;
    //   n=2, 10^4 terms: ~1.9e-14.  Frozen with an order of headroom.
    struct Budget {
        unsigned n;
        unsigned terms;
        double max_err;
    };
    for (const Budget& b : {Budget{0, 120, 1e-3}, Budget{1, 10000, 1e-9},
                            Budget{2, 10000, 1e-13}}) {
        RemainderValue f = remainder_factorial_series(b.n, z, b.terms, ctx);
        RemainderValue s = remainder_stieltjes(b.n, z, ctx);
        Real norm_scale = Real(factorial_exact(b.n + 1)) *
                          pow(Real(10), static_cast<int>(b.n) + 1);
        Real err = abs(f.value - s.value) / norm_scale;
        CHECK(err < Real(b.max_err));
    }

    // Error shrinks as terms grow (polynomial, but monotone at these stops).
    Real prev_err = -1;
    RemainderValue s = remainder_stieltjes(1, z, ctx);
    for (unsigned terms : {100u, 1000u, 10000u}) {
        RemainderValue f = remainder_factorial_series(1, z, terms, ctx);
        Real err = abs(f.value - s.value);
        if (prev_err >= 0) CHECK(err < prev_err);
        prev_err = err;
    }

    // Off the positive real axis the series diverges: L_k^{(-1)}(1/z) grows
    // like e^{2 Re(sqrt(-k/z))} (Perron regime) and overwhelms the k^-(n+1)
    // beta factor.  The reported last-term magnitude makes this visible.
    Complex zc = from_polar(Real(10), const_pi() / 4);
    RemainderValue early = remainder_factorial_series(2, zc, 2000, ctx);
    RemainderValue late = remainder_factorial_series(2, zc, 20000, ctx);
    CHECK(late.last_term_magnitude > early.last_term_magnitude);
    CHECK(late.last_term_magnitude > 1000 * early.last_term_magnitude);

    CHECK_THROWS_AS(remainder_factorial_series(0, z, 0, ctx),
                    parameter_error);
}

TEST_CASE("factorial-series recurrence matches direct polynomial values") {
    // Stability spot check: upward recurrence L_k^{(-1)}(1/z) against the
    // explicit series evaluation, k <= 40.
    ScopedPrecision guard(60);
    const Real x = Real(1) / 10;
    for (unsigned k : {5u, 20u, 40u}) {
        // L_k^(-1)(x) via the library recurrence with alpha = -1.
        Real rec = laguerre(k, Real(-1), x);
        // Direct sum: L_k^(a)(x) = sum_j (-1)^j C(k+a, k-j) x^j / j!.
        Real sum = 0;
        Real xpow = 1;
        for (unsigned j = 0; j <= k; ++j) {
            Real binom = to_real(Rational(pochhammer_exact(j, k - j),
                                          factorial_exact(k - j)),
                                 60);
            Real term = binom * xpow / Real(factorial_exact(j));
            sum += (j % 2 == 0) ? term : -term;
            xpow *= x;
        }
        CHECK(abs(rec - sum) < pow(Real(10), -50) * (1 + abs(sum)));
    }
}

TEST_CASE("optimal truncation index sits near (1-z)/z for small z") {
    ScopedPrecision guard(50);
    for (long denom : {20L, 7L}) {
        const Real z = Real(1) / denom;
        // Direct minimum search over term magnitudes v! z^v.
        Real best = -1;
        unsigned best_v = 0;
        Real term = 1;
        for (unsigned v = 0; v <= 60; ++v) {
            if (v > 0) term *= v * z;
            if (best < 0 || term < best) {
                best = term;
                best_v = v;
            }
        }
        const long predicted = denom - 1;  // (1-z)/z
        CHECK(std::labs(static_cast<long>(best_v) - predicted) <= 1);
    }
}
