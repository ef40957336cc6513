#include "eulersum/series_tools.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "eulersum/errors.hpp"
#include "eulersum/quadrature.hpp"

namespace eulersum {

namespace {

// Fetch one moment and enforce the positivity invariant of the sequence.
Int checked_moment(const MomentSequence& mu, unsigned j) {
    if (!mu.moment) {
        throw parameter_error("moment sequence has no generator");
    }
    Int value = mu.moment(j);
    if (value <= 0) {
        throw parameter_error("moment sequence must be strictly positive");
    }
    return value;
}

// (a)_len = a (a+1) ... (a+len-1) over the rationals.
Rational pochhammer_rational(const Rational& a, unsigned len) {
    Rational p = 1;
    Rational factor = a;
    for (unsigned i = 0; i < len; ++i) {
        p *= factor;
        factor += 1;
    }
    return p;
}

}  // namespace

MomentSequence euler_moments() {
    MomentSequence mu;
    mu.moment = [](unsigned j) { return factorial_exact(j); };
    return mu;
}

Rational hankel_determinant(const MomentSequence& mu, unsigned k, unsigned n) {
    if (k == 0) return 1;
    std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
    for (unsigned i = 0; i < k; ++i) {
        for (unsigned j = 0; j < k; ++j) {
            m[i][j] = Rational(checked_moment(mu, n + i + j));
        }
    }
    return determinant_exact(std::move(m));
}

Real stieltjes_truncation_bound(const MomentSequence& mu, unsigned n,
                                const Complex& z) {
    const Real a = arg(z);
    const Real pi = const_pi();
    if (abs(a) == pi) {
        throw cut_error("stieltjes_truncation_bound: z on the cut (-inf, 0]");
    }
    const Real first_term = Real(checked_moment(mu, n + 1)) *
                            pow(abs(z), static_cast<int>(n) + 1);
    if (abs(a) <= pi / 2) return first_term;
    return first_term / abs(sin(a));
}

Complex factorial_series_eval(const FactorialSeries& f, unsigned terms,
                              const PrecisionContext& ctx) {
    if (terms < 1) {
        throw parameter_error("factorial_series_eval: terms must be >= 1");
    }
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(f.z, ctx.digits);
    if (zz.im == 0 && zz.re <= 0 && floor(zz.re) == zz.re &&
        zz.re >= -(Real(terms) - 1)) {
        throw domain_error(
            "factorial_series_eval: Pochhammer factor vanishes at "
            "nonpositive integer z inside the truncation");
    }
    Complex sum;
    Real fac(1);          // nu!
    Complex poch = zz;    // (z)_{nu+1}
    const std::size_t stop =
        std::min<std::size_t>(terms, f.coefficients.size());
    for (std::size_t nu = 0; nu < stop; ++nu) {
        const Complex b = anchored(f.coefficients[nu], ctx.digits);
        sum += b * fac / poch;
        fac *= Real(static_cast<unsigned>(nu) + 1);
        poch *= zz + Complex(Real(static_cast<unsigned>(nu) + 1));
    }
    return anchored(sum, ctx.digits);
}

std::pair<Rational, Rational> delta_k_factorial_identity(unsigned k,
                                                         unsigned n,
                                                         const Rational& z) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(z) == 1) {
        const Int zi = numerator(z);
        if (zi <= 0 && zi >= -Int(n + k)) {
            throw domain_error(
                "delta_k_factorial_identity: Pochhammer factor vanishes at "
                "nonpositive integer z");
        }
    }
    const Rational nf(factorial_exact(n));
    Rational lhs = 0;
    for (unsigned j = 0; j <= k; ++j) {
        Rational term = Rational(binomial_exact(k, j)) * nf /
                        pochhammer_rational(z + j, n + 1);
        if ((k - j) % 2 == 1) term = -term;
        lhs += term;
    }
    Rational rhs =
        Rational(factorial_exact(n + k)) / pochhammer_rational(z, n + k + 1);
    if (k % 2 == 1) rhs = -rhs;
    return {lhs, rhs};
}

Complex factorial_series_integral_rep(const FactorialSeries& f,
                                      const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(f.z, ctx.digits);
    if (!(zz.re > 0)) {
        throw domain_error(
            "factorial_series_integral_rep: Re(z) > 0 required for the "
            "weight t^{z-1} to be integrable");
    }
    std::vector<Complex> b(f.coefficients.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        b[i] = anchored(f.coefficients[i], ctx.digits);
    }
    const bool real_power = zz.im == 0;
    const Real exponent = zz.re - 1;
    const Complex shift{zz.re - 1, zz.im};
    const Complex value =
        quad(on_unit_interval([&](const Real& t, const Real& omt) {
                 // phi evaluated by Horner in the exact 1 - t coordinate.
                 Complex phi;
                 for (std::size_t i = b.size(); i-- > 0;) {
                     phi = phi * omt + b[i];
                 }
                 if (real_power) return phi * pow(t, exponent);
                 return phi * exp(shift * Complex(log(t)));
             }),
             ctx);
    return anchored(value, ctx.digits);
}

}  // namespace eulersum
