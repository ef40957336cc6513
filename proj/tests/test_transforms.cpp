#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "eulersum/euler_series.hpp"
#include "eulersum/transforms.hpp"

using namespace eulersum;

namespace {

const char* kEulerAtHalf =
    "0.7226572337764451693943233153574798779091812830946";
const char* kEulerAtTen =
    "0.20146425447084516791000581535755200117369484144566";

// Partial sums s_0 .. s_N of sum_m (-1)^m m! z^m at working precision.
std::vector<Complex> euler_sums(unsigned N, const Complex& z,
                                unsigned digits) {
    ScopedPrecision guard(digits);
    std::vector<Complex> s;
    s.reserve(N + 1);
    for (unsigned n = 0; n <= N; ++n) s.push_back(partial_sum(n, z));
    return s;
}

std::vector<Complex> forward_differences(const std::vector<Complex>& s) {
    std::vector<Complex> w;
    w.reserve(s.size() - 1);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) w.push_back(s[i + 1] - s[i]);
    return w;
}

// gamma_0 .. gamma_N of the series, rounded once each.
std::vector<Complex> euler_coeffs(unsigned N, unsigned digits) {
    ScopedPrecision guard(digits);
    std::vector<Complex> g;
    g.reserve(N + 1);
    for (unsigned m = 0; m <= N; ++m)
        g.push_back(Complex(to_real(euler_coefficient(m), digits)));
    return g;
}

Real rel_err(const Complex& got, const Complex& want) {
    return abs(got - want) / abs(want);
}

Rational random_rational(std::mt19937& gen, bool nonzero) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    int a = num(gen);
    while (nonzero && a == 0) a = num(gen);
    return Rational(a, den(gen));
}

// The correction term each weight family annihilates, truncated after
// c.size() coefficients: sum_j c_j / (beta+n)^j (power),
// sum_j c_j / (beta+n)_j (pochhammer), sum_j c_j (beta+n)^j (constant).
Rational correction_term(WeightFamily family, const Rational& beta_plus_n,
                         const std::vector<Rational>& c) {
    Rational total(0);
    Rational basis(1);
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (j > 0) {
            switch (family) {
                case WeightFamily::power: basis /= beta_plus_n; break;
                case WeightFamily::pochhammer:
                    basis /= beta_plus_n + static_cast<long>(j) - 1;
                    break;
                case WeightFamily::constant: basis *= beta_plus_n; break;
            }
        }
        total += c[j] * basis;
    }
    return total;
}

}  // namespace

TEST_CASE("order zero returns the window base element") {
    auto ctx = make_context(50);
    const Complex z = from_polar(Real(2), const_pi() / 3);
    auto s = euler_sums(6, z, ctx.digits);
    auto w = forward_differences(s);
    const Real tol = pow(Real(10), -46);
    CHECK(rel_err(levin_l(Real(1), 0, 2, s, w, ctx), s[2]) < tol);
    CHECK(rel_err(weniger_s(Real(1), 0, 3, s, w, ctx), s[3]) < tol);
    CHECK(rel_err(drummond(0, 4, s, w, ctx), s[4]) < tol);
    CHECK(rel_err(delta_variant(Real(1), 0, 1, s, ctx), s[1]) < tol);
    CHECK(rel_err(d_variant(Real(1), 0, 0, s, ctx), s[0]) < tol);
}

TEST_CASE("order one: all three families coincide and give (1+z)/(1+2z)") {
    auto ctx = make_context(50);
    ScopedPrecision guard(ctx.digits);

    // At k = 1 every weight is exactly 1, so the three sums are identical.
    const Complex zc(Real(1), Real(1));
    auto s = euler_sums(4, zc, ctx.digits);
    auto w = forward_differences(s);
    const Complex l = levin_l(Real(1), 1, 0, s, w, ctx);
    CHECK(l == weniger_s(Real(1), 1, 0, s, w, ctx));
    CHECK(l == drummond(1, 0, s, w, ctx));

    // Hand expansion of the k=1, n=0 polynomial ratio.
    const Complex z(Real(3) / 7);
    auto s2 = euler_sums(3, z, ctx.digits);
    const Complex want = (Complex(Real(1)) + z) / (Complex(Real(1)) + 2 * z);
    CHECK(rel_err(delta_variant(Real(1), 1, 0, s2, ctx), want) <
          pow(Real(10), -45));
    CHECK(rel_err(d_variant(Real(1), 1, 0, s2, ctx), want) <
          pow(Real(10), -45));
}

TEST_CASE("exactness on each family's model sequence, rational arithmetic") {
    std::mt19937 gen(12345u);
    const Rational limit(355, 113);
    const WeightFamily fams[] = {WeightFamily::power, WeightFamily::pochhammer,
                                 WeightFamily::constant};
    const Rational betas[] = {Rational(1), Rational(3, 2)};
    for (WeightFamily fam : fams) {
        for (const Rational& beta : betas) {
            for (unsigned n0 : {0u, 2u}) {
                for (unsigned k = 1; k <= 8; ++k) {
                    // Random truncated correction term with c_0 != 0 and
                    // random nonzero remainder estimates.
                    std::vector<Rational> c;
                    for (unsigned j = 0; j < k; ++j)
                        c.push_back(random_rational(gen, j == 0));
                    std::vector<Rational> s(n0 + k + 1), om(n0 + k + 1);
                    for (unsigned m = 0; m <= n0 + k; ++m) {
                        om[m] = random_rational(gen, true);
                        Rational bn = beta + static_cast<long>(m);
                        s[m] = limit + om[m] * correction_term(fam, bn, c);
                    }
                    auto sums = detail::binomial_sums<Rational, Rational>(
                        fam, beta, k, n0, s, om, n0);
                    REQUIRE(sums.denominator != 0);
                    CHECK(sums.numerator / sums.denominator == limit);
                }
            }
        }
    }
}

TEST_CASE("exactness on model sequences, floating path with complex omega") {
    auto ctx = make_context(50);
    ScopedPrecision guard(ctx.digits);
    std::mt19937 gen(777u);
    const Real limit = to_real(Rational(355, 113), ctx.digits);
    const Real tol = pow(Real(10), -40);
    for (WeightFamily fam :
         {WeightFamily::power, WeightFamily::pochhammer,
          WeightFamily::constant}) {
        for (unsigned k : {4u, 8u}) {
            std::vector<Rational> c;
            for (unsigned j = 0; j < k; ++j)
                c.push_back(random_rational(gen, j == 0));
            std::vector<Complex> s(k + 1), om(k + 1);
            for (unsigned m = 0; m <= k; ++m) {
                om[m] = from_polar(Real(m + 1) / (m + 2),
                                   Real(m) * const_pi() / 5);
                Rational zc = correction_term(fam, Rational(1) + static_cast<long>(m), c);
                s[m] = Complex(limit) + om[m] * to_real(zc, ctx.digits);
            }
            TransformSpec spec{fam, Real(1), RemainderRule::explicit_omega};
            SequenceWindow win{s, om, 0};
            CHECK(rel_err(levin_type(spec, win, k, ctx), Complex(limit)) < tol);
        }
    }
}

TEST_CASE("sequence route and polynomial-ratio route agree") {
    auto ctx = make_context(70);
    ScopedPrecision guard(ctx.digits);
    // Measured route divergence at k = 20 is 10^(-digits+17) for the power
    // family (binomial-sum cancellation grows with k; pochhammer ~12 digits,
    // constant ~7) and scales with the working precision, so the routes are
    // formula-identical.  Frozen with margin at 18 digits of slack.
    const Real tol = pow(Real(10), -52);
    const std::vector<Complex> zs = {
        Complex(Real(1) / 2), Complex(Real(10)), Complex(Real(0), Real(10)),
        from_polar(Real(2), 3 * const_pi() / 4)};
    auto gamma = euler_coeffs(24, ctx.digits);
    for (const Complex& z : zs) {
        auto s = euler_sums(23, z, ctx.digits);
        auto w = forward_differences(s);
        for (unsigned n = 0; n <= 2; ++n) {
            for (unsigned k = 0; k <= 20; ++k) {
                const Complex via_delta = delta_variant(Real(1), k, n, s, ctx);
                const Complex via_d = d_variant(Real(1), k, n, s, ctx);
                const Complex via_dr = drummond(k, n, s, w, ctx);
                const Complex poly_delta = evaluate(
                    rational_form(RationalMethod::delta, Real(1), k, n, gamma,
                                  ctx),
                    z, ctx);
                const Complex poly_d = evaluate(
                    rational_form(RationalMethod::d, Real(1), k, n, gamma, ctx),
                    z, ctx);
                const Complex poly_dr = evaluate(
                    rational_form(RationalMethod::drummond_pade, Real(1), k, n,
                                  gamma, ctx),
                    z, ctx);
                CHECK(rel_err(via_delta, poly_delta) < tol);
                CHECK(rel_err(via_d, poly_d) < tol);
                CHECK(rel_err(via_dr, poly_dr) < tol);
            }
        }
    }
}

TEST_CASE("explicit coefficients of the k=1, n=0 polynomial ratio") {
    auto ctx = make_context(50);
    ScopedPrecision guard(ctx.digits);
    auto gamma = euler_coeffs(2, ctx.digits);
    auto r = rational_form(RationalMethod::delta, Real(1), 1, 0, gamma, ctx);
    REQUIRE(r.numerator_coeffs.size() == 2);
    REQUIRE(r.denominator_coeffs.size() == 2);
    const Real tol = pow(Real(10), -48);
    // Proportional to (1+z) over (1+2z): raw lists are -1/2 - z/2 and
    // -1/2 - z.
    const Real half = Real(1) / 2;
    CHECK(abs(r.numerator_coeffs[0] + Complex(half)) < tol);
    CHECK(abs(r.numerator_coeffs[1] + Complex(half)) < tol);
    CHECK(abs(r.denominator_coeffs[0] + Complex(half)) < tol);
    CHECK(abs(r.denominator_coeffs[1] + Complex(Real(1))) < tol);
    CHECK(r.method == "delta");
    CHECK(r.k == 1);
    CHECK(r.n == 0);
}

TEST_CASE("accuracy through order z^(k+n+1), exact rational check") {
    // f(z) * den(z) - num(z) must vanish through degree k+n+1: one degree
    // beyond the shared terms, matching the O(z^(k+n+2)) defect.  Needs
    // k >= 1: at k = 0 the value is the bare partial sum, which matches
    // only through z^n.
    for (WeightFamily fam :
         {WeightFamily::pochhammer, WeightFamily::power,
          WeightFamily::constant}) {
        for (unsigned n = 0; n <= 2; ++n) {
            for (unsigned k = 1; k <= 4; ++k) {
                std::vector<Rational> gamma;
                for (unsigned m = 0; m <= n + k + 1; ++m)
                    gamma.push_back(Rational(euler_coefficient(m)));
                auto rc = detail::rational_coeffs<Rational, Rational>(
                    fam, Rational(1), k, n, gamma);
                for (unsigned m = 0; m <= n + k + 1; ++m) {
                    Rational conv(0);
                    for (unsigned i = 0; i <= k && i <= m; ++i)
                        conv += rc.den[i] * gamma[m - i];
                    Rational num_m =
                        m < rc.num.size() ? rc.num[m] : Rational(0);
                    CHECK(conv - num_m == 0);
                }
            }
        }
    }
}

TEST_CASE("binomial-sum route matches the two-sequence recurrences") {
    auto ctx = make_context(70);
    ScopedPrecision guard(ctx.digits);
    // Measured divergence between the summation and recurrence evaluations
    // reaches 10^(-digits+17) at k = 20 (power family) and scales with the
    // working precision; frozen with margin at 20 digits of slack.
    const Real tol = pow(Real(10), -50);
    for (const Complex& z :
         {Complex(Real(10)), Complex(Real(1), Real(1))}) {
        auto s = euler_sums(23, z, ctx.digits);
        auto w = forward_differences(s);
        for (unsigned n = 0; n <= 1; ++n) {
            for (unsigned k = 0; k <= 20; ++k) {
                const Complex rl = levin_type_recursive(WeightFamily::power,
                                                        Real(1), k, n, s, w,
                                                        ctx);
                const Complex rs = levin_type_recursive(
                    WeightFamily::pochhammer, Real(1), k, n, s, w, ctx);
                const Complex rd = levin_type_recursive(WeightFamily::constant,
                                                        Real(1), k, n, s, w,
                                                        ctx);
                CHECK(rel_err(levin_l(Real(1), k, n, s, w, ctx), rl) < tol);
                CHECK(rel_err(weniger_s(Real(1), k, n, s, w, ctx), rs) < tol);
                CHECK(rel_err(drummond(k, n, s, w, ctx), rd) < tol);
            }
        }
    }
}

TEST_CASE("epsilon table: initialization, [1/1], and the even-column triangle") {
    auto ctx = make_context(60);
    ScopedPrecision guard(ctx.digits);
    const Real tol = pow(Real(10), -48);

    {
        const Complex z(Real(2));
        auto s = euler_sums(8, z, ctx.digits);
        auto t = wynn_epsilon(s, 8, ctx);
        for (unsigned n = 0; n <= 8; ++n) CHECK(t.value(0, n) == s[n]);
        const Complex want = (Complex(Real(1)) + z) / (Complex(Real(1)) + 2 * z);
        CHECK(rel_err(t.value(2, 0), want) < tol);
        CHECK(t.pade(1, 0) == t.value(2, 0));
        // Staircase walks [0/0], [1/0], [1/1], [2/1], [2/2], ...
        CHECK(t.staircase(0) == t.value(0, 0));
        CHECK(t.staircase(1) == t.value(0, 1));
        CHECK(t.staircase(3) == t.value(2, 1));
        CHECK(t.staircase(4) == t.value(4, 0));
        CHECK_THROWS_AS(t.value(9, 0), parameter_error);
        CHECK_THROWS_AS(t.value(4, 5), parameter_error);
    }

    // Even columns equal the constant-family transformation on the same
    // window, both being the [k+n/k] rational value.  The comparison scale
    // carries a +1: an approximant can vanish at the chosen z (the k=1, n=3
    // numerator has a root at z=1), where a relative test divides by zero.
    for (const Complex& z :
         {Complex(Real(1)), Complex(Real(0), Real(10))}) {
        auto s = euler_sums(23, z, ctx.digits);
        auto w = forward_differences(s);
        auto t = wynn_epsilon(s, 23, ctx);
        for (unsigned n = 0; n <= 3; ++n)
            for (unsigned k = 1; k <= 10; ++k) {
                const Complex want = drummond(k, n, s, w, ctx);
                CHECK(abs(t.pade(k, n) - want) < tol * (abs(want) + 1));
            }
    }
}

TEST_CASE("even-column epsilon values bracket the limit on the positive axis") {
    auto ctx = make_context(50);
    ScopedPrecision guard(ctx.digits);
    const Real e10(kEulerAtTen);
    auto s = euler_sums(17, Complex(Real(10)), ctx.digits);
    auto t = wynn_epsilon(s, 17, ctx);
    for (unsigned k = 1; k <= 8; ++k) {
        const Complex lower = t.pade(k, 1);  // [k+1/k]
        const Complex upper = t.pade(k, 0);  // [k/k]
        CHECK(lower.im == 0);
        CHECK(upper.im == 0);
        CHECK(lower.re < e10);
        CHECK(e10 < upper.re);
    }
}

TEST_CASE("staircase converges for moderate argument") {
    auto ctx = make_context(50);
    ScopedPrecision guard(ctx.digits);
    const Real ehalf(kEulerAtHalf);
    auto s = euler_sums(12, Complex(Real(1) / 2), ctx.digits);
    auto t = wynn_epsilon(s, 12, ctx);
    Real prev(0);
    bool first = true;
    for (unsigned nu : {2u, 6u, 10u}) {
        Real err = abs(t.staircase(nu) - Complex(ehalf));
        if (!first) CHECK(err < prev / 10);
        prev = err;
        first = false;
    }
}

TEST_CASE("degenerate data raises typed breakdowns") {
    auto ctx = make_context(40);
    ScopedPrecision guard(ctx.digits);
    const std::vector<Complex> flat = {Complex(Real(1)), Complex(Real(1)),
                                       Complex(Real(1))};

    // Constant sequence: remainder estimates vanish.
    CHECK_THROWS_AS(delta_variant(Real(1), 1, 0, flat, ctx), breakdown_error);

    // Equal remainder estimates cancel the k=1 denominator sum exactly.
    const std::vector<Complex> s2 = {Complex(Real(2)), Complex(Real(5))};
    const std::vector<Complex> w2 = {Complex(Real(3)), Complex(Real(3))};
    CHECK_THROWS_AS(levin_l(Real(1), 1, 0, s2, w2, ctx), breakdown_error);

    // Epsilon breakdown carries the location of the failed entry.
    try {
        wynn_epsilon(flat, 2, ctx);
        CHECK(false);
    } catch (const epsilon_breakdown& e) {
        CHECK(e.k == 1);
        CHECK(e.n == 0);
    }

    // Caller mistakes are parameter errors, not breakdowns.
    CHECK_THROWS_AS(levin_l(Real(1), 5, 0, s2, w2, ctx), parameter_error);
    CHECK_THROWS_AS(levin_l(Real(0), 1, 0, s2, w2, ctx), parameter_error);
    CHECK_THROWS_AS(
        rational_form(RationalMethod::delta, Real(1), 0, 0,
                      {Complex(Real(1)), Complex(Real(0))}, ctx),
        parameter_error);
    const std::vector<Complex> wz = {Complex(Real(0)), Complex(Real(3))};
    CHECK_THROWS_AS(levin_l(Real(1), 1, 0, s2, wz, ctx), parameter_error);
}

TEST_CASE("pochhammer-family difference variant sums the series at z = 10") {
    // Strongly divergent argument: partial sums blow up past 10^80, yet the
    // transformation converges, with an envelope shrinking monotonically.
    auto ctx = make_context(150);
    ScopedPrecision guard(ctx.digits);
    const Complex z(Real(10));
    const Complex ref = euler_integral(z, ctx);
    CHECK(abs(ref - Complex(Real(kEulerAtTen))) < pow(Real(10), -48));

    auto s = euler_sums(62, z, ctx.digits);
    std::vector<Real> err;
    err.push_back(Real(0));  // unused k = 0 slot
    for (unsigned k = 1; k <= 60; ++k)
        err.push_back(abs(delta_variant(Real(1), k, 0, s, ctx) - ref));

    auto envelope = [&](unsigned from) {
        Real m(0);
        for (unsigned k = from; k <= 60; ++k)
            if (err[k] > m) m = err[k];
        return m;
    };
    const Real e5 = envelope(5), e15 = envelope(15), e30 = envelope(30),
               e45 = envelope(45);
    CHECK(e15 < e5);
    CHECK(e30 < e15);
    CHECK(e45 < e30);
    CHECK(envelope(50) < pow(Real(10), -11));
}
