#include "eulersum/specfun.hpp"

#include <cstddef>

#include "eulersum/errors.hpp"

namespace eulersum {
namespace {

bool is_nonpositive_integer(const Complex& a) {
    return a.im == 0 && a.re <= 0 && a.re == floor(a.re);
}

}  // namespace

Complex laguerre(unsigned k, const Real& alpha, const Complex& x) {
    Complex prev(Real(1));  // L_0
    if (k == 0) return prev;
    Complex curr = Complex(1 + alpha) - x;  // L_1
    for (unsigned m = 1; m < k; ++m) {
        Complex next = ((Complex(2 * m + 1 + alpha) - x) * curr -
                        (m + alpha) * prev) /
                       Real(m + 1);
        prev = curr;
        curr = next;
    }
    return curr;
}

Real laguerre(unsigned k, const Real& alpha, const Real& x) {
    return laguerre(k, alpha, Complex(x)).re;
}

Complex hyp_terminating(const TerminatingHyp& h) {
    if (h.numerator_params.empty() ||
        !is_nonpositive_integer(h.numerator_params.front())) {
        throw parameter_error(
            "hyp_terminating: first numerator parameter must be a "
            "nonpositive integer");
    }
    const long k = -static_cast<long>(h.numerator_params.front().re);
    for (const Complex& b : h.denominator_params) {
        if (is_nonpositive_integer(b) && b.re >= Real(-k)) {
            throw parameter_error(
                "hyp_terminating: denominator Pochhammer vanishes inside "
                "the terminating range");
        }
    }

    Complex term(Real(1));
    Complex sum = term;
    for (long j = 0; j < k; ++j) {
        for (const Complex& a : h.numerator_params) term *= a + Complex(j);
        for (const Complex& b : h.denominator_params) {
            const Complex d = b + Complex(j);
            if (d.re == 0 && d.im == 0) {
                throw parameter_error(
                    "hyp_terminating: denominator Pochhammer vanishes");
            }
            term /= d;
        }
        term *= h.argument / Real(j + 1);
        sum += term;
    }
    return sum;
}

Complex kummer_u_scaled(unsigned k, unsigned n, const Complex& z,
                        const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(z, ctx.digits);
    if (zz.im == 0 && zz.re <= 0) {
        throw cut_error(
            "kummer_u_scaled: z on (-inf, 0] puts the integrand pole on "
            "the path");
    }
    const long power = static_cast<long>(k) + static_cast<long>(n) + 2;
    Complex integral = quad(
        on_half_line([&](const Real& xi) {
            return pow(xi, static_cast<int>(k)) * exp(-xi) /
                   principal_power(Complex(Real(1)) + zz * xi, Real(power));
        }),
        ctx);
    return principal_power(zz, Real(static_cast<long>(k) + 1)) * integral;
}

Complex exp_integral_e1(const Complex& x, const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Complex xx = anchored(x, ctx.digits);
    if (xx.im == 0 && xx.re <= 0) {
        throw cut_error("exp_integral_e1: x on the cut (-inf, 0]");
    }
    if (abs(xx) <= 1) {
        // -gamma - ln x + sum_{m>=1} (-1)^{m+1} x^m / (m m!); factorially
        // convergent on the closed unit disk.
        Complex sum;
        Complex power(Real(1));  // x^m accumulator
        Real mfact = 1;
        const Real stop = pow(Real(10), -static_cast<int>(ctx.digits) - 5);
        for (unsigned m = 1; m < 10000; ++m) {
            power *= xx;
            mfact *= m;
            const Complex term = power / (m * mfact);
            sum += (m % 2 == 1) ? term : -term;
            if (abs(term) < stop * (1 + abs(sum))) break;
        }
        return sum - Complex(const_euler_gamma()) - log(xx);
    }
    // e^-x int_0^inf e^-s / (s+x) ds; pole at s = -x stays off the path.
    Complex integral = quad(on_half_line([&](const Real& s) {
                                return exp(-s) / (Complex(s) + xx);
                            }),
                            ctx);
    return exp(-xx) * integral;
}

Complex laguerre_asymptotic(LaguerreAsymMode mode, unsigned n,
                            const Real& alpha, const Complex& x) {
    if (n == 0) throw domain_error("laguerre_asymptotic: degree must be >= 1");
    const Real pi = const_pi();
    const Real nn(static_cast<long>(n));
    const Complex front =
        exp(x / Real(2)) * pow(nn, alpha / 2 - Real(1) / 4) / sqrt(pi);
    switch (mode) {
        case LaguerreAsymMode::fejer: {
            if (!(x.im == 0 && x.re > 0)) {
                throw domain_error(
                    "laguerre_asymptotic: fejer mode needs x > 0");
            }
            const Real phase =
                2 * sqrt(nn * x.re) - alpha * pi / 2 - pi / 4;
            return front * cos(phase) / pow(x.re, alpha / 2 + Real(1) / 4);
        }
        case LaguerreAsymMode::perron: {
            if ((x.im == 0 && x.re > 0) || (x.re == 0 && x.im == 0)) {
                throw domain_error(
                    "laguerre_asymptotic: perron mode needs x off (0, inf) "
                    "and nonzero");
            }
            // Coefficient 1/(2 sqrt(pi)): the surviving dominant exponential
            // of the interpolating form, whose phase factors cancel exactly
            // against the branch of x^(alpha/2+1/4) on the negative axis.
            const Complex minus_x = -x;
            return front * exp(2 * sqrt(nn * minus_x)) /
                   (2 * principal_power(minus_x, alpha / 2 + Real(1) / 4));
        }
        case LaguerreAsymMode::interpolating: {
            if (x.im == 0 && x.re <= 0) {
                throw domain_error(
                    "laguerre_asymptotic: interpolating mode needs "
                    "|arg(2 sqrt(n x))| < pi");
            }
            const Complex theta =
                2 * sqrt(nn * x) - Complex(alpha * pi / 2 + pi / 4);
            const Complex i_theta(-theta.im, theta.re);  // i * theta
            return front * (exp(i_theta) + exp(-i_theta)) /
                   (2 * principal_power(x, alpha / 2 + Real(1) / 4));
        }
    }
    throw domain_error("laguerre_asymptotic: unknown mode");
}

}  // namespace eulersum
