#include "eulersum/euler_series.hpp"

#include "eulersum/errors.hpp"
#include "eulersum/quadrature.hpp"
#include "eulersum/specfun.hpp"

namespace eulersum {
namespace {

void require_off_cut(const Complex& z, const char* who) {
    if (z.im == 0 && z.re <= 0) {
        throw cut_error(std::string(who) + ": z on the cut (-inf, 0]");
    }
}

// (-1)^{n+1} (n+1)! z^{n+1}: the factor between the normalized finite-
// interval remainder and R_n itself.
Complex remainder_scale(unsigned n, const Complex& z) {
    const Real fact = Real(factorial_exact(n + 1));
    Complex zp(Real(1));
    for (unsigned i = 0; i <= n; ++i) zp *= z;
    const Complex s = zp * fact;
    return (n % 2 == 0) ? -s : s;
}

}  // namespace

Int euler_coefficient(unsigned m) {
    Int f = factorial_exact(m);
    return (m % 2 == 0) ? f : -f;
}

Complex partial_sum(unsigned n, const Complex& z) {
    Complex sum;
    Complex zpow(Real(1));
    Int coeff = 1;
    for (unsigned v = 0; v <= n; ++v) {
        if (v > 0) {
            coeff *= v;
            zpow *= z;
        }
        const Complex term = zpow * Real(coeff);
        sum += (v % 2 == 0) ? term : -term;
    }
    return sum;
}

Rational partial_sum_exact(unsigned n, const Rational& z) {
    Rational sum = 0;
    Rational zpow = 1;
    Int coeff = 1;
    for (unsigned v = 0; v <= n; ++v) {
        if (v > 0) {
            coeff *= v;
            zpow *= z;
        }
        const Rational term = zpow * coeff;
        sum += (v % 2 == 0) ? term : -term;
    }
    return sum;
}

Complex euler_integral(const Complex& z, const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(z, ctx.digits);
    require_off_cut(zz, "euler_integral");
    return quad(on_half_line([&zz](const Real& t) {
                    return exp(-t) / (Complex(Real(1)) + zz * t);
                }),
                ctx);
}

Complex euler_integral_via_exp_integral(const Complex& z,
                                        const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(z, ctx.digits);
    require_off_cut(zz, "euler_integral_via_exp_integral");
    const Complex w = Complex(Real(1)) / zz;  // 1/z stays off the cut too
    return exp(w) / zz * exp_integral_e1(w, ctx);
}

RemainderValue remainder_difference(unsigned n, const Complex& z,
                                    const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(z, ctx.digits);
    RemainderValue r;
    r.n = n;
    r.z = zz;
    r.representation = RemainderRepresentation::difference;
    r.value = partial_sum(n, zz) - euler_integral(zz, ctx);
    return r;
}

RemainderValue remainder_stieltjes(unsigned n, const Complex& z,
                                   const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(z, ctx.digits);
    require_off_cut(zz, "remainder_stieltjes");
    Complex integral = quad(on_half_line([&](const Real& t) {
                                return pow(t, static_cast<int>(n) + 1) *
                                       exp(-t) /
                                       (Complex(Real(1)) + zz * t);
                            }),
                            ctx);
    // -(-z)^{n+1} * integral
    Complex mzp(Real(1));
    for (unsigned i = 0; i <= n; ++i) mzp *= -zz;
    RemainderValue r;
    r.n = n;
    r.z = zz;
    r.representation = RemainderRepresentation::stieltjes_integral;
    r.value = -(mzp * integral);
    return r;
}

Real remainder_bound(unsigned n, const Complex& z) {
    const Real a = arg(z);
    const Real pi = const_pi();
    if (abs(a) == pi) {
        throw cut_error("remainder_bound: z on the cut (-inf, 0]");
    }
    const Real first_term = Real(factorial_exact(n + 1)) *
                            pow(abs(z), static_cast<int>(n) + 1);
    if (abs(a) <= pi / 2) return first_term;
    return first_term / abs(sin(a));
}

RemainderValue remainder_laguerre_integral(unsigned n, const Complex& z,
                                           const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(z, ctx.digits);
    require_off_cut(zz, "remainder_laguerre_integral");
    const Complex inv_z = Complex(Real(1)) / zz;
    Complex normalized =
        quad(on_unit_interval([&](const Real& t, const Real& omt) {
                 // e^{-(1-t)/(zt)} t^n; 1-t arrives cancellation-free.
                 return exp(-(inv_z * (omt / t))) *
                        pow(t, static_cast<int>(n));
             }),
             ctx);
    normalized = -(inv_z * normalized);
    RemainderValue r;
    r.n = n;
    r.z = zz;
    r.representation = RemainderRepresentation::laguerre_integral;
    r.integrand_decay_ok = inv_z.re > 0;
    r.value = remainder_scale(n, zz) * normalized;
    return r;
}

RemainderValue remainder_factorial_series(unsigned n, const Complex& z,
                                          unsigned terms,
                                          const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(z, ctx.digits);
    require_off_cut(zz, "remainder_factorial_series");
    if (terms < 1) {
        throw parameter_error("remainder_factorial_series: terms must be >= 1");
    }
    const Complex x = Complex(Real(1)) / zz;  // Laguerre argument 1/z

    // Upward three-term recurrence for L_k^{(-1)}(x) interleaved with the
    // beta-factor ratio k!/(n+1)_{k+1}, advanced as r *= (k+1)/(n+k+2).
    // Real z gets a scalar loop: term counts reach into the millions, and
    // complex arithmetic would triple the cost for a zero imaginary part.
    Complex sum;
    Real last = 0;
    if (zz.im == 0) {
        Real s = 0, l_prev = 0, l_curr = 1;
        Real ratio = Real(1) / (n + 1);
        const Real xr = x.re;
        for (unsigned k = 0; k < terms; ++k) {
            const Real term = l_curr * ratio;
            s += term;
            last = abs(term);
            ratio *= Real(k + 1) / (n + k + 2);
            // alpha = -1: (k+1) L_{k+1} = (2k - x) L_k - (k-1) L_{k-1}.
            const Real l_next =
                ((2 * Real(static_cast<long>(k)) - xr) * l_curr -
                 (static_cast<long>(k) - Real(1)) * l_prev) /
                Real(static_cast<long>(k) + 1);
            l_prev = l_curr;
            l_curr = l_next;
        }
        sum = Complex(s);
    } else {
        Complex l_prev;            // L_{k-1}
        Complex l_curr(Real(1));   // L_0
        Real ratio = Real(1) / (n + 1);
        for (unsigned k = 0; k < terms; ++k) {
            const Complex term = l_curr * ratio;
            sum += term;
            last = abs(term);
            ratio *= Real(k + 1) / (n + k + 2);
            const Complex l_next =
                ((Complex(Real(2 * static_cast<long>(k))) - x) * l_curr -
                 (static_cast<long>(k) - Real(1)) * l_prev) /
                Real(static_cast<long>(k) + 1);
            l_prev = l_curr;
            l_curr = l_next;
        }
    }
    const Complex normalized = -(sum / zz);

    RemainderValue r;
    r.n = n;
    r.z = zz;
    r.representation = RemainderRepresentation::factorial_series;
    r.last_term_magnitude = last * abs(Real(1) / zz);
    r.value = remainder_scale(n, zz) * normalized;
    return r;
}

}  // namespace eulersum
