#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "eulersum/errors.hpp"

namespace eulersum {

// Arbitrary-precision real, precision chosen at runtime.  Expression
// templates are off so every intermediate is a plain value: arithmetic is
// deterministic for a fixed working precision, and binary operations carry
// the larger of the two operand precisions.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>,
    boost::multiprecision::et_off>;

// Working-precision configuration shared across the library.
//
//   digits       decimal digits of working precision (>= 30)
//   quad_rel_tol relative tolerance handed to quadrature, >= 10^(10-digits)
struct PrecisionContext {
    unsigned digits = 0;
    Real quad_rel_tol;
};

// RAII guard that sets the thread's default precision for newly constructed
// Real values and restores the previous default on scope exit.  Every public
// entry point of the library opens one of these with the context's digits.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned digits)
        : saved_(Real::default_precision()) {
        Real::default_precision(digits);
    }
    ~ScopedPrecision() { Real::default_precision(saved_); }

    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

PrecisionContext make_context(unsigned digits);
PrecisionContext make_context(unsigned digits, const Real& quad_rel_tol);

// Copy re-rounded to the given number of digits.  Used at public entry
// points so caller-supplied values cannot drag a foreign precision through
// max-precision propagation in mixed expressions.
inline Real anchored(Real x, unsigned digits) {
    x.precision(digits);
    return x;
}

// Rectangular complex value on Real components.  Polar form appears only at
// construction (from_polar) and in branch-cut-sensitive powers; everything
// else stays rectangular to avoid repeated argument renormalization.
struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}  // NOLINT: implicit by design
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
    explicit Complex(long r) : re(r), im(0) {}
};

inline Complex anchored(Complex z, unsigned digits) {
    z.re.precision(digits);
    z.im.precision(digits);
    return z;
}

inline Complex operator+(const Complex& a, const Complex& b) {
    return {a.re + b.re, a.im + b.im};
}
inline Complex operator-(const Complex& a, const Complex& b) {
    return {a.re - b.re, a.im - b.im};
}
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
inline Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Complex operator*(const Complex& a, const Real& s) {
    return {a.re * s, a.im * s};
}
inline Complex operator*(const Real& s, const Complex& a) { return a * s; }
inline Complex operator/(const Complex& a, const Real& s) {
    return {a.re / s, a.im / s};
}
inline Complex operator/(const Complex& a, const Complex& b) {
    // Plain formula; mpfr's exponent range makes scaling tricks unnecessary.
    const Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline Complex operator/(const Real& s, const Complex& b) {
    return Complex(s) / b;
}
inline Complex& operator+=(Complex& a, const Complex& b) { return a = a + b; }
inline Complex& operator-=(Complex& a, const Complex& b) { return a = a - b; }
inline Complex& operator*=(Complex& a, const Complex& b) { return a = a * b; }
inline Complex& operator/=(Complex& a, const Complex& b) { return a = a / b; }
inline bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
}

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }

// Modulus |z|.
Real abs(const Complex& z);

// Principal argument in (-pi, pi].
Real arg(const Complex& z);

// exp, log (principal branch), sqrt (principal branch).
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex sqrt(const Complex& z);

// modulus * (cos(phase) + i sin(phase)); phase in radians, modulus >= 0.
Complex from_polar(const Real& modulus, const Real& phase);

// z^p = exp(p (ln|z| + i arg z)) with arg z in (-pi, pi].  z = 0 returns 0
// for p > 0 and throws domain_error otherwise.
Complex principal_power(const Complex& z, const Real& p);
Complex principal_power(const Complex& z, const Complex& p);

// pi at the current thread default precision.
Real const_pi();

// Euler-Mascheroni constant at the current thread default precision.
Real const_euler_gamma();

}  // namespace eulersum
