#include "eulersum/precision.hpp"

#include <boost/math/constants/constants.hpp>

namespace eulersum {

PrecisionContext make_context(unsigned digits) {
    if (digits < 30) {
        throw config_error(
            "working precision must be at least 30 decimal digits");
    }
    ScopedPrecision guard(digits);
    PrecisionContext ctx;
    ctx.digits = digits;
    // Loosest tolerance the invariant allows; callers may tighten it.
    ctx.quad_rel_tol = pow(Real(10), 10 - static_cast<int>(digits));
    return ctx;
}

PrecisionContext make_context(unsigned digits, const Real& quad_rel_tol) {
    PrecisionContext ctx = make_context(digits);
    ScopedPrecision guard(digits);
    const Real floor = pow(Real(10), 10 - static_cast<int>(digits));
    if (!(quad_rel_tol >= floor)) {
        throw config_error(
            "quadrature tolerance must be at least 10^(10-digits)");
    }
    ctx.quad_rel_tol = anchored(quad_rel_tol, digits);
    return ctx;
}

Real abs(const Complex& z) {
    using boost::multiprecision::hypot;
    return hypot(z.re, z.im);
}

Real arg(const Complex& z) {
    // atan2(+0, x<0) = +pi, so a zero imaginary part on the negative axis
    // already lands on the principal branch's closed edge.
    using boost::multiprecision::atan2;
    return atan2(z.im, z.re);
}

Complex exp(const Complex& z) {
    using boost::multiprecision::exp;
    const Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z) {
    using boost::multiprecision::log;
    return {log(abs(z)), arg(z)};
}

Complex sqrt(const Complex& z) {
    return principal_power(z, Real(1) / 2);
}

Complex from_polar(const Real& modulus, const Real& phase) {
    return {modulus * cos(phase), modulus * sin(phase)};
}

Complex principal_power(const Complex& z, const Real& p) {
    if (z.re == 0 && z.im == 0) {
        if (p > 0) return Complex(Real(0));
        throw domain_error("principal_power: 0 raised to a power <= 0");
    }
    // Real positive base with the whole computation on the real axis keeps
    // the imaginary part exactly zero instead of at rounding level.
    if (z.im == 0 && z.re > 0) {
        return Complex(pow(z.re, p));
    }
    return exp(Complex(p * log(abs(z)), p * arg(z)));
}

Complex principal_power(const Complex& z, const Complex& p) {
    if (p.im == 0) return principal_power(z, p.re);
    if (z.re == 0 && z.im == 0) {
        throw domain_error("principal_power: 0 base with complex exponent");
    }
    return exp(p * log(z));
}

Real const_pi() { return boost::math::constants::pi<Real>(); }

Real const_euler_gamma() { return boost::math::constants::euler<Real>(); }

}  // namespace eulersum
