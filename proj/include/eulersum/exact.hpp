#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

#include "eulersum/errors.hpp"
#include "eulersum/precision.hpp"

// Exact integer / rational helpers.  Binomial weights, factorials and
// Pochhammer symbols feeding the transformation sums are built here without
// rounding; floating-point values are produced only at the final conversion.

namespace eulersum {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial_exact(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial_exact(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    // r stays integral after each division: r holds C(n, i) exactly.
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Rising factorial (a)_n = a (a+1) ... (a+n-1) for integer a.
inline Int pochhammer_exact(long a, unsigned n) {
    Int r = 1;
    for (unsigned i = 0; i < n; ++i) r *= a + static_cast<long>(i);
    return r;
}

// Rising factorial over any scalar with arithmetic (Real, Complex, Rational).
template <typename T>
T pochhammer(const T& a, unsigned n) {
    T r(1);
    for (unsigned i = 0; i < n; ++i) r *= a + T(static_cast<long>(i));
    return r;
}

inline Real to_real(const Int& v, unsigned digits) {
    ScopedPrecision guard(digits);
    return anchored(Real(v), digits);
}

inline Real to_real(const Rational& v, unsigned digits) {
    ScopedPrecision guard(digits);
    Real num(boost::multiprecision::numerator(v));
    Real den(boost::multiprecision::denominator(v));
    return anchored(num / den, digits);
}

// Exact determinant of a square rational matrix.  Denominators are cleared
// row by row, then the integer part runs Bareiss fraction-free elimination:
// every division in the sweep is exact, so no entry ever leaves the integers
// and intermediate growth stays polynomial.
inline Rational determinant_exact(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m) {
        if (row.size() != n)
            throw parameter_error("determinant_exact: matrix must be square");
    }

    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Rational scale = 1;  // det(m) = det(a) / scale
    for (std::size_t i = 0; i < n; ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const Int d = boost::multiprecision::denominator(m[i][j]);
            lcm = boost::multiprecision::lcm(lcm, d);
        }
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = boost::multiprecision::numerator(m[i][j]) *
                      (lcm / boost::multiprecision::denominator(m[i][j]));
        }
        scale *= lcm;
    }

    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;  // singular
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return Rational(sign * a[n - 1][n - 1]) / scale;
}

}  // namespace eulersum
