#include "eulersum/pade.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "eulersum/errors.hpp"
#include "eulersum/euler_series.hpp"

namespace eulersum {

namespace {

Real tens_power(long e) { return pow(Real(10), e); }

// Exact weight C(k,j) / (n+j+1)! of the closed form; n + j >= -1.
Rational closed_form_weight(unsigned k, long n, unsigned j) {
    const unsigned f = static_cast<unsigned>(n + static_cast<long>(j) + 1);
    return Rational(binomial_exact(k, j), factorial_exact(f));
}

void check_closed_form_indices(long n) {
    if (n < -1)
        throw parameter_error(
            "pade_euler_closed_form: numerator offset must be >= -1");
}

}  // namespace

PadeIndex staircase_index(unsigned k, long j) {
    if (j < -1 || static_cast<long>(k) + j < 0)
        throw parameter_error("staircase_index: requires j >= -1 and k+j >= 0");
    return {static_cast<unsigned>(static_cast<long>(k) + j), k};
}

Complex pade_euler_closed_form(unsigned k, long n, const Complex& z,
                               const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    check_closed_form_indices(n);
    const Complex zz = anchored(z, ctx.digits);
    if (zz.re == 0 && zz.im == 0)
        throw parameter_error("pade_euler_closed_form: z must be nonzero");

    std::vector<Complex> zp(k + 1);
    zp[0] = Complex(Real(1));
    for (unsigned i = 1; i <= k; ++i) zp[i] = zp[i - 1] * zz;

    // Running partial sum s_m and term (-1)^m m! z^m, advanced on demand.
    Complex num{Real(0), Real(0)};
    Complex den{Real(0), Real(0)};
    Complex s{Real(0), Real(0)};
    Complex term{Real(1), Real(0)};
    long m = -1;  // index of the last term folded into s
    for (unsigned j = 0; j <= k; ++j) {
        const long target = n + static_cast<long>(j);
        while (m < target) {
            ++m;
            if (m > 0) term *= zz * Real(-m);
            s += term;
        }
        const Real w = to_real(closed_form_weight(k, n, j), ctx.digits);
        const Complex wj = zp[k - j] * w;
        num += wj * s;
        den += wj;
    }
    if (abs(den) == 0)
        throw breakdown_error(
            "pade_euler_closed_form: evaluated at a pole of the approximant");
    return num / den;
}

Rational pade_euler_closed_form_exact(unsigned k, long n, const Rational& z) {
    check_closed_form_indices(n);
    if (z == 0)
        throw parameter_error("pade_euler_closed_form: z must be nonzero");

    std::vector<Rational> zp(k + 1);
    zp[0] = 1;
    for (unsigned i = 1; i <= k; ++i) zp[i] = zp[i - 1] * z;

    Rational num = 0;
    Rational den = 0;
    Rational s = 0;
    Rational term = 1;
    long m = -1;
    for (unsigned j = 0; j <= k; ++j) {
        const long target = n + static_cast<long>(j);
        while (m < target) {
            ++m;
            if (m > 0) term *= z * Rational(-m);
            s += term;
        }
        const Rational wj = zp[k - j] * closed_form_weight(k, n, j);
        num += wj * s;
        den += wj;
    }
    if (den == 0)
        throw breakdown_error(
            "pade_euler_closed_form: evaluated at a pole of the approximant");
    return num / den;
}

ClosedFormPolynomials pade_euler_closed_form_polynomials(unsigned k, long n) {
    check_closed_form_indices(n);
    const std::size_t num_deg =
        n >= 0 ? k + static_cast<unsigned>(n) : (k >= 1 ? k - 1 : 0);
    ClosedFormPolynomials p;
    p.numerator.assign(num_deg + 1, Rational(0));
    p.denominator.assign(k + 1, Rational(0));
    for (unsigned j = 0; j <= k; ++j) {
        const Rational w = closed_form_weight(k, n, j);
        p.denominator[k - j] += w;
        const long top = n + static_cast<long>(j);
        for (long m = 0; m <= top; ++m) {
            p.numerator[k - j + static_cast<unsigned>(m)] +=
                w * Rational(euler_coefficient(static_cast<unsigned>(m)));
        }
    }
    return p;
}

Rational pade_determinant_oracle(const PadeIndex& idx, const Rational& z) {
    const unsigned m = idx.m;
    const unsigned n = idx.n;
    if (m + n > 16)
        throw parameter_error(
            "pade_determinant_oracle: oracle limited to m+n <= 16");
    if (m + 1 < n)
        throw parameter_error("pade_determinant_oracle: requires m >= n-1");

    const unsigned pmax = std::max(m, n);
    std::vector<Rational> zp(pmax + 1);
    zp[0] = 1;
    for (unsigned i = 1; i <= pmax; ++i) zp[i] = zp[i - 1] * z;

    std::vector<Rational> gamma(m + n + 1);
    for (unsigned i = 0; i <= m + n; ++i)
        gamma[i] = Rational(euler_coefficient(i));

    const std::size_t dim = n + 1;
    std::vector<std::vector<Rational>> num_m(dim, std::vector<Rational>(dim));
    auto den_m = num_m;
    for (unsigned i = 0; i + 1 < dim; ++i) {
        for (unsigned c = 0; c <= n; ++c) {
            num_m[i][c] = gamma[m + 1 - n + i + c];
            den_m[i][c] = num_m[i][c];
        }
    }
    for (unsigned c = 0; c <= n; ++c) {
        Rational acc = 0;
        for (unsigned j = n - c; j <= m; ++j) acc += gamma[j - (n - c)] * zp[j];
        num_m[n][c] = acc;
        den_m[n][c] = zp[n - c];
    }

    const Rational dd = determinant_exact(den_m);
    if (dd == 0)
        throw breakdown_error(
            "pade_determinant_oracle: degenerate table, denominator "
            "determinant vanishes at this z");
    return determinant_exact(num_m) / dd;
}

StieltjesReport check_stieltjes_inequalities(const Real& z, unsigned depth,
                                             const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Real zz = anchored(z, ctx.digits);
    if (!(zz > 0))
        throw domain_error("check_stieltjes_inequalities: z must be positive");

    const Rational zr(zz);  // exact: a binary float is a dyadic rational
    std::map<std::pair<long, unsigned>, Rational> cache;
    const auto approximant = [&](long p, unsigned q) -> const Rational& {
        const auto key = std::make_pair(p, q);
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache
                     .emplace(key, pade_euler_closed_form_exact(
                                       q, p - static_cast<long>(q), zr))
                     .first;
        }
        return it->second;
    };
    const auto as_real = [&](const Rational& v) {
        return to_real(v, ctx.digits);
    };

    StieltjesReport report;
    report.z = zz;
    report.depth = depth;

    const Real e_value = euler_integral(Complex(zz), ctx).re;
    const Real band = tens_power(20 - static_cast<long>(ctx.digits));

    const auto push = [&](std::string family, unsigned m, long j, Real margin,
                          InequalityStatus status, bool exact) {
        InequalityCheck c;
        c.family = std::move(family);
        c.m = m;
        c.j = j;
        c.margin = margin;
        c.status = status;
        c.exact = exact;
        if (status == InequalityStatus::fails) ++report.failed;
        if (status == InequalityStatus::inconclusive) ++report.inconclusive;
        report.checks.push_back(std::move(c));
    };
    const auto push_exact = [&](const std::string& family, unsigned m, long j,
                                const Rational& margin) {
        push(family, m, j, as_real(margin),
             margin >= 0 ? InequalityStatus::holds : InequalityStatus::fails,
             true);
    };
    const auto push_float = [&](const std::string& family, unsigned m,
                                const Real& margin) {
        InequalityStatus st = InequalityStatus::inconclusive;
        if (margin > band) st = InequalityStatus::holds;
        if (margin < -band) st = InequalityStatus::fails;
        push(family, m, 0, margin, st, false);
    };

    for (unsigned m = 0; m <= depth; ++m) {
        const long ml = static_cast<long>(m);
        for (long j = -1; j <= 2; ++j) {
            // Sign (-1)^{j+1}: the step is upward for odd j, downward for
            // even j.
            const bool odd = (j % 2) != 0;
            if (ml + j >= 0) {
                Rational d = approximant(ml + j + 1, m + 1) -
                             approximant(ml + j, m);
                if (!odd) d = -d;
                push_exact("diagonal_step", m, j, d);
            }
            if (m >= 1 && ml + j >= 0) {
                Rational d = approximant(ml + j, m) -
                             approximant(ml + j + 1, m - 1);
                if (!odd) d = -d;
                push_exact("cross_step", m, j, d);
            }
        }
        push_float("function_bracket_upper", m,
                   as_real(approximant(ml, m)) - e_value);
        push_float("function_bracket_lower", m,
                   e_value - as_real(approximant(ml - 1, m)));
        push_exact("off_diagonal_pair", m, 0,
                   approximant(ml, m + 1) - approximant(ml + 1, m));
        push_float("staircase_bracket_lower", m,
                   e_value - as_real(approximant(ml + 1, m)));
        push_float("staircase_bracket_upper", m,
                   as_real(approximant(ml + 1, m + 1)) - e_value);
    }
    return report;
}

bool accuracy_through_order_check(const std::vector<Rational>& num,
                                  const std::vector<Rational>& den,
                                  unsigned order) {
    if (num.empty() || den.empty())
        throw parameter_error(
            "accuracy_through_order_check: empty coefficient vector");
    if (den[0] == 0)
        throw breakdown_error(
            "accuracy_through_order_check: non-normal approximant, "
            "denominator constant term is zero");
    const std::size_t cap = (num.size() - 1) + (den.size() - 1) + 1;
    if (order > cap)
        throw parameter_error(
            "accuracy_through_order_check: order exceeds the degree budget "
            "deg(num) + deg(den) + 1");

    std::vector<Rational> t(order + 1);
    for (unsigned i = 0; i <= order; ++i) {
        Rational acc = i < num.size() ? num[i] : Rational(0);
        const unsigned lmax =
            std::min<std::size_t>(i, den.size() - 1);
        for (unsigned l = 1; l <= lmax; ++l) acc -= den[l] * t[i - l];
        t[i] = acc / den[0];
        if (t[i] != Rational(euler_coefficient(i))) return false;
    }
    return true;
}

bool accuracy_through_order_check(const RationalApproximant& r, unsigned order,
                                  const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    if (r.numerator_coeffs.empty() || r.denominator_coeffs.empty())
        throw parameter_error(
            "accuracy_through_order_check: empty coefficient vector");
    const Complex d0 = anchored(r.denominator_coeffs[0], ctx.digits);
    if (abs(d0) == 0)
        throw breakdown_error(
            "accuracy_through_order_check: non-normal approximant, "
            "denominator constant term is zero");
    const std::size_t cap = (r.numerator_coeffs.size() - 1) +
                            (r.denominator_coeffs.size() - 1) + 1;
    if (order > cap)
        throw parameter_error(
            "accuracy_through_order_check: order exceeds the degree budget "
            "deg(num) + deg(den) + 1");

    const Real tol = tens_power(18 - static_cast<long>(ctx.digits));
    std::vector<Complex> t(order + 1);
    for (unsigned i = 0; i <= order; ++i) {
        Complex acc = i < r.numerator_coeffs.size()
                          ? anchored(r.numerator_coeffs[i], ctx.digits)
                          : Complex(Real(0));
        const unsigned lmax =
            std::min<std::size_t>(i, r.denominator_coeffs.size() - 1);
        for (unsigned l = 1; l <= lmax; ++l)
            acc -= anchored(r.denominator_coeffs[l], ctx.digits) * t[i - l];
        t[i] = acc / d0;
        const Real gamma = to_real(euler_coefficient(i), ctx.digits);
        const Real scale = std::max(Real(1), abs(Complex(gamma)));
        if (abs(t[i] - Complex(gamma)) > tol * scale) return false;
    }
    return true;
}

RationalApproximant baker_normalized(const RationalApproximant& r,
                                     const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    if (r.denominator_coeffs.empty())
        throw parameter_error("baker_normalized: empty denominator");
    const Complex d0 = anchored(r.denominator_coeffs[0], ctx.digits);
    if (abs(d0) == 0)
        throw breakdown_error(
            "baker_normalized: non-normal approximant, denominator constant "
            "term is zero");
    RationalApproximant out = r;
    for (auto& c : out.numerator_coeffs)
        c = anchored(c, ctx.digits) / d0;
    for (auto& c : out.denominator_coeffs)
        c = anchored(c, ctx.digits) / d0;
    return out;
}

}  // namespace eulersum
