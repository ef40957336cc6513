#include "eulersum/analysis.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eulersum/errors.hpp"
#include "eulersum/euler_series.hpp"
#include "eulersum/pade.hpp"
#include "eulersum/quadrature.hpp"
#include "eulersum/specfun.hpp"
#include "eulersum/transforms.hpp"

namespace eulersum {

namespace {

Complex cos_c(const Complex& w) {
    const Complex iw{-w.im, w.re};
    return (exp(iw) + exp(-iw)) * (Real(1) / 2);
}

// arctan w = (i/2) [log(1 - iw) - log(1 + iw)], principal branch.
Complex atan_c(const Complex& w) {
    const Complex iw{-w.im, w.re};
    const Complex one{Real(1), Real(0)};
    const Complex d = log(one - iw) - log(one + iw);
    return Complex{-d.im, d.re} * (Real(1) / 2);
}

Complex pow_uint(const Complex& base, unsigned e) {
    Complex r{Real(1), Real(0)};
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

// Ascending coefficients of the terminating 2F1(-k, k+n; n+1; t); they
// alternate in sign and grow to about 4^k, which the guard digits of the
// quadrature absorb.
std::vector<Rational> oscillatory_factor_coeffs(unsigned k, unsigned n) {
    std::vector<Rational> c(k + 1);
    c[0] = 1;
    Rational cur(1);
    for (unsigned j = 1; j <= k; ++j) {
        const long lj = static_cast<long>(j);
        const long lk = static_cast<long>(k);
        const long ln = static_cast<long>(n);
        cur *= Rational(Int(lj - 1 - lk) * Int(lk + ln + lj - 1),
                        Int(ln + lj) * Int(lj));
        c[j] = cur;
    }
    return c;
}

// Ascending coefficients in w = 1/z of the terminating
// 2F2(-k, k+n; n+1, n+2; -w).  All positive: the alternation of (-k)_j
// cancels against the (-w)^j powers.
std::vector<Rational> denominator_series_coeffs(unsigned k, unsigned n) {
    std::vector<Rational> e(k + 1);
    e[0] = 1;
    Rational cur(1);
    for (unsigned j = 1; j <= k; ++j) {
        const long lj = static_cast<long>(j);
        const long lk = static_cast<long>(k);
        const long ln = static_cast<long>(n);
        cur *= Rational(Int(lk - lj + 1) * Int(lk + ln + lj - 1),
                        Int(ln + lj) * Int(ln + lj + 1) * Int(lj));
        e[j] = cur;
    }
    return e;
}

Real horner(const std::vector<Real>& c, const Real& t) {
    Real acc = c.back();
    for (std::size_t j = c.size() - 1; j-- > 0;) acc = acc * t + c[j];
    return acc;
}

std::vector<Real> to_reals(const std::vector<Rational>& c, unsigned digits) {
    std::vector<Real> r;
    r.reserve(c.size());
    for (const Rational& q : c) r.push_back(to_real(q, digits));
    return r;
}

// int_U^inf e^{-cu} R(u) du for R(u) = sum_j coeff_j (1+u)^{-(n+2+j)},
// summed by repeated integration by parts:
//   sum_m e^{-cU} R^{(m)}(U) / c^{m+1},
// every derivative explicit in the (1+u)^{-s} basis.  The caller picks U
// large enough that the terms fall below the target before the factorial
// growth of (n+2+j)_m turns the asymptotic series around.
Complex parts_tail(const std::vector<Real>& coeff, unsigned n, const Complex& c,
                   const Real& u_cap, const Real& finite_scale, const Real& tol,
                   unsigned max_terms) {
    const Real opu = 1 + u_cap;
    std::vector<Real> d(coeff.size());
    {
        Real pw = 1;
        for (unsigned s = 0; s < n + 2; ++s) pw /= opu;
        for (std::size_t j = 0; j < coeff.size(); ++j) {
            d[j] = coeff[j] * pw;
            pw /= opu;
        }
    }
    const Complex damp = exp(-(c * u_cap));
    Complex cpow = c;
    Complex acc;
    Real best = -1;
    unsigned small_streak = 0;
    for (unsigned m = 0; m <= max_terms; ++m) {
        Real s = 0;
        for (const Real& dj : d) s += dj;
        const Complex term = damp * s / cpow;
        acc += term;
        const Real mag = abs(term);
        Real scale = finite_scale;
        const Real accmag = abs(acc);
        if (accmag > scale) scale = accmag;
        if (scale > 0 && mag <= tol * scale) {
            if (++small_streak >= 2) return acc;
        } else {
            small_streak = 0;
        }
        if (best < 0 || mag < best) best = mag;
        if (mag > best * Real(1000000)) break;  // asymptotic turnaround
        for (std::size_t j = 0; j < d.size(); ++j) {
            d[j] *= -Real(static_cast<long>(n + 2 + j + m)) / opu;
        }
        cpow *= c;
    }
    Real scale = finite_scale;
    if (abs(acc) > scale) scale = abs(acc);
    throw quadrature_error(
        "integration-by-parts tail stalled before the target tolerance",
        (scale > 0 && best >= 0) ? (best / scale).str(5) : std::string("unknown"));
}

struct SlopeFit {
    Real slope{0};
    unsigned points = 0;
};

// Least-squares slope of log(-log(mag/amplitude)) against log k: the decay
// exponent nu of mag ~ amplitude * exp(-c k^nu), with c absorbed into the
// intercept.  Points at or above the amplitude are skipped (the model has
// nothing to say about them).
SlopeFit exponent_after_amplitude_removal(const std::vector<unsigned>& ks,
                                          const std::vector<Real>& mags,
                                          const Real& amplitude) {
    std::vector<Real> xs;
    std::vector<Real> ys;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (!(mags[i] > 0) || !(mags[i] < amplitude)) continue;
        xs.push_back(log(Real(ks[i])));
        ys.push_back(log(-log(mags[i] / amplitude)));
    }
    SlopeFit fit;
    fit.points = static_cast<unsigned>(xs.size());
    if (fit.points < 2) return fit;
    Real sx = 0;
    Real sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const Real xbar = sx / fit.points;
    const Real ybar = sy / fit.points;
    Real sxx = 0;
    Real sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
    }
    fit.slope = sxy / sxx;
    return fit;
}

std::vector<Complex> hessenberg_qr_eigenvalues(
    std::vector<std::vector<Complex>> h, unsigned digits) {
    const long nn = static_cast<long>(h.size());
    std::vector<Complex> eig(nn);
    const Real eps = pow(Real(10), 8 - static_cast<long>(digits));
    long m = nn - 1;
    unsigned sweeps_since_deflation = 0;
    unsigned total_sweeps = 0;
    const unsigned sweep_cap = 80 * static_cast<unsigned>(nn) + 200;
    while (m >= 0) {
        // Start of the trailing fully coupled block.
        long l = m;
        while (l > 0) {
            Real scale = abs(h[l - 1][l - 1]) + abs(h[l][l]);
            if (scale == 0) scale = 1;
            if (abs(h[l][l - 1]) <= eps * scale) {
                h[l][l - 1] = Complex{};
                break;
            }
            --l;
        }
        if (l == m) {
            eig[m] = h[m][m];
            --m;
            sweeps_since_deflation = 0;
            continue;
        }
        if (++total_sweeps > sweep_cap) {
            throw breakdown_error(
                "companion eigenvalue iteration failed to converge");
        }
        // Wilkinson shift from the trailing 2x2, with an occasional
        // magnitude-based exceptional shift to break symmetry stalls.
        Complex mu;
        if (++sweeps_since_deflation % 16 == 0) {
            mu = h[m][m] + Complex(abs(h[m][m - 1]) * Real(3) / 2);
        } else {
            const Complex a = h[m - 1][m - 1];
            const Complex b = h[m - 1][m];
            const Complex c = h[m][m - 1];
            const Complex d = h[m][m];
            const Complex tr = a + d;
            const Complex disc = sqrt(tr * tr - Real(4) * (a * d - b * c));
            const Complex mu1 = (tr + disc) * (Real(1) / 2);
            const Complex mu2 = (tr - disc) * (Real(1) / 2);
            mu = abs(mu1 - d) <= abs(mu2 - d) ? mu1 : mu2;
        }
        for (long i = l; i <= m; ++i) h[i][i] -= mu;
        // One explicit QR sweep on the block via complex Givens rotations.
        std::vector<std::pair<Complex, Complex>> rot(m - l);
        for (long i = l; i < m; ++i) {
            const Complex x = h[i][i];
            const Complex y = h[i + 1][i];
            const Real r = sqrt(abs(x) * abs(x) + abs(y) * abs(y));
            Complex gc{Real(1), Real(0)};
            Complex gs{};
            if (r > 0) {
                gc = x / r;
                gs = y / r;
            }
            rot[i - l] = {gc, gs};
            for (long j = i; j <= m; ++j) {
                const Complex hi = h[i][j];
                const Complex hj = h[i + 1][j];
                h[i][j] = conj(gc) * hi + conj(gs) * hj;
                h[i + 1][j] = gc * hj - gs * hi;
            }
        }
        for (long i = l; i < m; ++i) {
            const Complex gc = rot[i - l].first;
            const Complex gs = rot[i - l].second;
            const long rmax = std::min(i + 1, m);
            for (long r2 = l; r2 <= rmax; ++r2) {
                const Complex vi = h[r2][i];
                const Complex vj = h[r2][i + 1];
                h[r2][i] = vi * gc + vj * gs;
                h[r2][i + 1] = vj * conj(gc) - vi * conj(gs);
            }
        }
        for (long i = l; i <= m; ++i) h[i][i] += mu;
    }
    return eig;
}

}  // namespace

std::string to_string(ErrorMethod m) {
    switch (m) {
        case ErrorMethod::delta:
            return "delta";
        case ErrorMethod::pade:
            return "pade";
        case ErrorMethod::levin_d:
            return "levin_d";
        case ErrorMethod::drummond:
            return "drummond";
    }
    return "unknown";
}

std::optional<ErrorMethod> parse_error_method(const std::string& name) {
    if (name == "delta") return ErrorMethod::delta;
    if (name == "pade") return ErrorMethod::pade;
    if (name == "levin_d") return ErrorMethod::levin_d;
    if (name == "drummond") return ErrorMethod::drummond;
    return std::nullopt;
}

Complex observed_error(ErrorMethod method, unsigned k, unsigned n,
                       const Complex& z, const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(z, ctx.digits);
    const Complex target = euler_integral(zz, ctx);
    if (method == ErrorMethod::pade) {
        const Complex approx =
            pade_euler_closed_form(k, static_cast<long>(n), zz, ctx);
        return anchored(approx - target, ctx.digits);
    }
    std::vector<Complex> s(n + k + 2);
    Complex term{Real(1), Real(0)};
    s[0] = term;
    for (unsigned m = 1; m < s.size(); ++m) {
        term *= -(zz * Real(m));
        s[m] = s[m - 1] + term;
    }
    Complex value;
    switch (method) {
        case ErrorMethod::delta:
            value = delta_variant(Real(1), k, n, s, ctx);
            break;
        case ErrorMethod::levin_d:
            value = d_variant(Real(1), k, n, s, ctx);
            break;
        case ErrorMethod::drummond: {
            std::vector<Complex> omega(s.size() - 1);
            for (std::size_t m = 0; m + 1 < s.size(); ++m) {
                omega[m] = s[m + 1] - s[m];
            }
            value = drummond(k, n, s, omega, ctx);
            break;
        }
        case ErrorMethod::pade:
            break;  // handled above
    }
    return anchored(value - target, ctx.digits);
}

Complex delta_error_direct(unsigned k, unsigned n, const Complex& z,
                           const PrecisionContext& ctx) {
    return observed_error(ErrorMethod::delta, k, n, z, ctx);
}

DeltaErrorClosed delta_error_closed(unsigned k, unsigned n, const Complex& z,
                                    const PrecisionContext& ctx) {
    if (k < 1) throw domain_error("delta closed error form needs k >= 1");
    if (z.im == 0 && z.re <= 0) {
        throw cut_error("z must stay off the cut (-inf, 0]");
    }
    // Guard digits absorb the ~0.6k digits of cancellation in the
    // oscillatory polynomial factor; the quadrature target stays on the
    // caller's scale rather than tightening with the guard.
    const unsigned local_digits = ctx.digits + k + 10;
    const long tol_exp = std::max(-static_cast<long>(ctx.digits) - 5,
                                  11 - static_cast<long>(local_digits));
    const PrecisionContext local =
        make_context(local_digits, pow(Real(10), tol_exp));
    ScopedPrecision guard(local_digits);
    const Complex zz = anchored(z, local_digits);
    const Complex c = Real(1) / zz;
    const Real abs_c = abs(c);

    const std::vector<Real> pc =
        to_reals(oscillatory_factor_coeffs(k, n), local_digits + 20);

    DeltaErrorClosed out;
    out.k = k;
    out.n = n;
    out.z = anchored(z, ctx.digits);
    out.integrand_decay_ok = c.re > 0;

    Complex integral;
    const Real boundary_slack = pow(Real(10), -static_cast<long>(ctx.digits / 2));
    if (c.re * 4 >= abs_c) {
        // Solid pointwise decay at t -> 0: double-exponential quadrature on
        // (0,1), split into panels at the Chebyshev points (1 - cos)/2 so
        // that each panel sees only a few of the k sign changes of the
        // oscillatory polynomial factor (its zeros cluster toward the
        // endpoints exactly like Chebyshev nodes).  The 1-t coordinate is
        // propagated through the affine panel maps without cancellation.
        const unsigned panels = 1 + k / 4;
        std::vector<std::array<Real, 2>> edge(panels + 1);
        for (unsigned i = 0; i <= panels; ++i) {
            const Real ct = cos(const_pi() * Real(i) / panels);
            edge[i] = {(1 - ct) / 2, (1 + ct) / 2};
        }
        for (unsigned p = 0; p < panels; ++p) {
            const Real a = edge[p][0];
            const Real omb = edge[p + 1][1];
            const Real width = edge[p + 1][0] <= Real(1) / 2
                                   ? edge[p + 1][0] - a
                                   : edge[p][1] - omb;
            auto f = [&, a, omb, width](const Real& s,
                                        const Real& oms) -> Complex {
                const Real t = a + width * s;
                const Real omt = omb + width * oms;
                const Complex w = c * (omt / t);
                const Complex osc = exp(Complex{-w.re, -w.im});
                Real amp = horner(pc, t);
                for (unsigned i = 0; i < n; ++i) amp *= t;
                return osc * amp;
            };
            integral += quad(on_unit_interval(f), local) * width;
        }
    } else if (c.re >= -(abs_c * boundary_slack)) {
        // Boundary regime Re(1/z) ~ 0: the integrand stops decaying at
        // t -> 0 and converges only conditionally.  The real substitution
        // u = (1-t)/t turns the troublesome endpoint into a half-line tail
        // of a rational function times e^{-u/z}; panelled quadrature covers
        // [0, U] and the tail beyond U is summed exactly by parts.
        const unsigned uc_units = std::max<unsigned>(
            2 * (k + n) + 200, (5 * local_digits + 1) / 2);
        const Real u_cap = Real(static_cast<long>(uc_units)) / abs_c;
        const unsigned panels = 1 + (k + uc_units / 6) / 4;
        const Real w_pan = Real(1) / panels;
        Complex finite;
        for (unsigned p = 0; p < panels; ++p) {
            const Real a = Real(p) / panels;
            auto f = [&, a](const Real& s, const Real&) -> Complex {
                const Real v = a + w_pan * s;
                const Real u = u_cap * v;
                const Real y = Real(1) / (1 + u);
                Real amp = horner(pc, y);
                for (unsigned i = 0; i < n + 2; ++i) amp *= y;
                return exp(-(c * u)) * (amp * u_cap);
            };
            finite += quad(on_unit_interval(f), local) * w_pan;
        }
        const Complex tail =
            parts_tail(pc, n, c, u_cap, abs(finite),
                       anchored(local.quad_rel_tol, local_digits),
                       10 * uc_units);
        integral = finite + tail;
    } else {
        throw quadrature_error(
            "finite-interval error representation diverges for Re(1/z) < 0",
            "divergent");
    }

    const std::vector<Real> dc =
        to_reals(denominator_series_coeffs(k, n), local_digits + 20);
    Complex f22{dc.back(), Real(0)};
    for (std::size_t j = dc.size() - 1; j-- > 0;) f22 = f22 * c + Complex(dc[j]);
    Real term_scale = 0;
    {
        Real wpow = 1;
        for (const Real& e : dc) {
            const Real t = e * wpow;
            if (t > term_scale) term_scale = t;
            wpow *= abs_c;
        }
    }
    const Real floor =
        pow(Real(10), 5 - static_cast<long>(local_digits)) * term_scale;
    if (abs(f22) <= floor) {
        throw breakdown_error(
            "terminating 2F2 denominator lost all significance -- "
            "degenerate error value");
    }

    Complex value = pow_uint(-zz, n) * integral / f22;
    value = value * to_real(factorial_exact(n + 1), local_digits);
    out.integral = anchored(integral, ctx.digits);
    out.hyp2f2 = anchored(f22, ctx.digits);
    out.value = anchored(value, ctx.digits);
    return out;
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& ascending,
                                      unsigned digits) {
    ScopedPrecision guard(digits);
    if (ascending.empty()) throw parameter_error("empty coefficient list");
    if (abs(ascending.back()) == 0) {
        throw parameter_error("leading coefficient vanishes");
    }
    const std::size_t deg = ascending.size() - 1;
    if (deg == 0) return {};
    const Complex lead = ascending.back();
    if (deg == 1) return {-(ascending[0] / lead)};
    std::vector<std::vector<Complex>> h(deg, std::vector<Complex>(deg));
    for (std::size_t i = 0; i < deg; ++i) {
        h[i][deg - 1] = -(ascending[i] / lead);
        if (i > 0) h[i][i - 1] = Complex{Real(1), Real(0)};
    }
    return hessenberg_qr_eigenvalues(std::move(h), digits);
}

DenominatorPolynomial delta_denominator_poly(unsigned k, unsigned n,
                                             const PrecisionContext& ctx) {
    DenominatorPolynomial out;
    out.k = k;
    out.n = n;
    out.coefficients = denominator_series_coeffs(k, n);
    if (k == 0) return out;
    const unsigned digits2 = 2 * ctx.digits;
    ScopedPrecision guard(digits2);
    std::vector<Complex> cc;
    cc.reserve(k + 1);
    for (const Rational& q : out.coefficients) {
        cc.push_back(Complex(to_real(q, digits2)));
    }
    std::vector<Complex> roots = polynomial_roots(cc, digits2);
    std::sort(roots.begin(), roots.end(),
              [](const Complex& a, const Complex& b) {
                  if (a.re != b.re) return a.re < b.re;
                  return a.im < b.im;
              });
    const Real thresh = pow(Real(10), -static_cast<long>(ctx.digits / 2));
    for (const Complex& w : roots) {
        out.zeros_w.push_back(anchored(w, ctx.digits));
        out.zeros_z.push_back(anchored(Real(1) / w, ctx.digits));
        if (abs(w.im) <= thresh && w.re < 0) ++out.real_negative_count;
    }
    return out;
}

Complex delta_error_asymptotic(unsigned k, const Complex& z,
                               const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(z, ctx.digits);
    const Complex inv = Real(1) / zz;
    const Complex z13 = principal_power(zz, Real(1) / 3);
    const Real k23 = pow(Real(k), Real(2) / 3);
    const Complex pref = Real(4) * const_pi() * inv;
    const Complex expo = exp(inv - (Real(9) / 2) * (k23 / z13));
    const Complex phase = cos_c((Real(3) * sqrt(Real(3)) / 2) * (k23 / z13) +
                                Complex(const_pi() / 6));
    return anchored(pref * expo * phase, ctx.digits);
}

Complex delta_numerator_asymptotic(unsigned k, const Complex& z,
                                   const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(z, ctx.digits);
    const Complex inv = Real(1) / zz;
    const Complex z13 = principal_power(zz, Real(1) / 3);
    const Real k23 = pow(Real(k), Real(2) / 3);
    const Real k43 = pow(Real(k), Real(4) / 3);
    const Complex pref = Real(4) / (z13 * (sqrt(Real(3)) * k43));
    const Complex expo = exp(-(inv / 3) - (Real(3) / 2) * (k23 / z13));
    const Complex phase = cos_c((Real(3) * sqrt(Real(3)) / 2) * (k23 / z13) +
                                Complex(const_pi() / 6));
    return anchored(pref * expo * phase, ctx.digits);
}

Complex delta_denominator_asymptotic(unsigned k, const Complex& z,
                                     const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(z, ctx.digits);
    const Complex inv = Real(1) / zz;
    const Complex z13 = principal_power(zz, Real(1) / 3);
    const Real k23 = pow(Real(k), Real(2) / 3);
    const Complex pref =
        principal_power(zz / (Real(k) * Real(k)), Real(2) / 3) /
        (Real(2) * const_pi() * sqrt(Real(3)));
    const Complex expo = exp(Real(3) * (k23 / z13) - inv / 3);
    return anchored(pref * expo, ctx.digits);
}

SaddleData delta_saddle_data(unsigned k, const Complex& z,
                             const PrecisionContext& ctx) {
    if (k < 1) throw domain_error("saddle data needs k >= 1");
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(z, ctx.digits);
    const Complex alpha = Real(1) / zz;
    // i k / alpha = i k z
    const Complex ikz{-(Real(k) * zz.im), Real(k) * zz.re};
    SaddleData sd;
    sd.tau0 = principal_power(ikz, Real(1) / 3);
    sd.tau3 = Complex{Real(0), Real(3) / (Real(4) * Real(k))};
    const Complex t2 = sd.tau0 * sd.tau0;
    const Complex opt2 = Complex{Real(1), Real(0)} + t2;
    const Complex ik{Real(0), Real(k)};
    sd.f0 = (Real(3) / 2) * log(sd.tau0) - alpha * t2 +
            Real(2) * (ik * atan_c(sd.tau0));
    sd.f0_second = -(Real(3) / 2) / t2 - Real(2) * alpha -
                   Real(4) * (ik * sd.tau0) / (opt2 * opt2);
    sd.g0 = Real(1) / (opt2 * opt2);
    sd.tau0 = anchored(sd.tau0, ctx.digits);
    sd.tau3 = anchored(sd.tau3, ctx.digits);
    sd.f0 = anchored(sd.f0, ctx.digits);
    sd.f0_second = anchored(sd.f0_second, ctx.digits);
    sd.g0 = anchored(sd.g0, ctx.digits);
    return sd;
}

Real delta_numerator_saddle_form(unsigned k, const Real& z,
                                 const PrecisionContext& ctx) {
    if (!(z > 0)) {
        throw domain_error(
            "stationary-phase assembly is stated for real z > 0");
    }
    ScopedPrecision guard(ctx.digits);
    const SaddleData sd = delta_saddle_data(k, Complex(anchored(z, ctx.digits)),
                                            ctx);
    const Real alpha = 1 / anchored(z, ctx.digits);
    Real amp = Real(4) * sqrt(Real(2) / Real(k)) * exp(-alpha);
    if (k % 2 == 1) amp = -amp;
    const Complex phase_unit = from_polar(Real(1), const_pi() / 4);
    const Complex core = phase_unit * sd.g0 * exp(sd.f0) *
                         principal_power(-sd.f0_second, Real(-1) / 2);
    return anchored(amp * core.re, ctx.digits);
}

Real hyp2f1_oscillatory_asym(unsigned k, const Real& x,
                             const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Real xa = anchored(x, ctx.digits);
    if (!(abs(xa) < 1)) {
        throw domain_error(
            "oscillatory form needs -1 < x < 1; it degenerates at the "
            "endpoints");
    }
    Real amp = pow((1 - xa) / (1 + xa), Real(1) / 4) /
               sqrt(const_pi() * Real(k));
    if (k % 2 == 1) amp = -amp;
    const Real phase = Real(k) * acos(xa) + const_pi() / 4;
    return anchored(amp * cos(phase), ctx.digits);
}

Complex pade_error_closed(unsigned k, unsigned n, const Complex& z,
                          const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(z, ctx.digits);
    if (zz.im == 0 && zz.re <= 0) {
        throw cut_error("z must stay off the cut (-inf, 0]");
    }
    const Complex u = kummer_u_scaled(k, n, zz, ctx);
    const Complex x = -(Real(1) / zz);
    const Complex lag = laguerre(k, Real(n + 1), x);
    // The all-positive coefficient sum at -|x| bounds the term scale, so it
    // serves as the reference for the degeneracy floor.
    const Real lag_scale = laguerre(k, Real(n + 1), -(Real(1) / abs(zz)));
    const Real floor =
        pow(Real(10), 5 - static_cast<long>(ctx.digits)) * lag_scale;
    if (abs(lag) <= floor) {
        throw breakdown_error(
            "generalized Laguerre denominator degenerate at this z");
    }
    Complex value = pow_uint(-zz, n) * u / lag;
    value = value *
            to_real(pochhammer_exact(static_cast<long>(k) + 1, n + 1),
                    ctx.digits);
    return anchored(value, ctx.digits);
}

Complex pade_error_asymptotic(unsigned k, unsigned n, const Complex& z,
                              const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(z, ctx.digits);
    const Complex inv = Real(1) / zz;
    const Complex z12 = sqrt(zz);
    Complex value = Real(2) * const_pi() * inv * exp(inv) *
                    exp(-(Real(4) * sqrt(Real(k))) / z12);
    if (n % 2 == 1) value = -value;
    return anchored(value, ctx.digits);
}

SuperiorityReport superiority_check(const Complex& z, unsigned k_min,
                                    unsigned k_max, unsigned k_threshold,
                                    const PrecisionContext& ctx) {
    if (k_min < 1 || k_max < k_min) {
        throw config_error("k range must satisfy 1 <= k_min <= k_max");
    }
    if (ctx.digits < 2 * k_max + 30) {
        throw config_error(
            "working precision too low for the requested k range (needs at "
            "least 2*k_max + 30 digits)");
    }
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(z, ctx.digits);
    SuperiorityReport rep;
    rep.z = zz;
    rep.k_min = k_min;
    rep.k_max = k_max;
    rep.k_threshold = k_threshold;
    const Complex target = euler_integral(zz, ctx);
    std::vector<Complex> s(k_max + 2);
    {
        Complex term{Real(1), Real(0)};
        s[0] = term;
        for (unsigned m = 1; m < s.size(); ++m) {
            term *= -(zz * Real(m));
            s[m] = s[m - 1] + term;
        }
    }
    std::vector<Real> dmag;
    std::vector<Real> pmag;
    for (unsigned k = k_min; k <= k_max; ++k) {
        const Complex de = delta_variant(Real(1), k, 0, s, ctx) - target;
        const Complex pe = pade_euler_closed_form(k, 0, zz, ctx) - target;
        rep.delta_errors.push_back(anchored(de, ctx.digits));
        rep.pade_errors.push_back(anchored(pe, ctx.digits));
        dmag.push_back(abs(de));
        pmag.push_back(abs(pe));
    }
    rep.worst_ratio = Real(0);
    for (unsigned k = std::max(k_min, k_threshold); k <= k_max; ++k) {
        const std::size_t i = k - k_min;
        if (!(dmag[i] < pmag[i])) ++rep.violations;
        if (pmag[i] > 0) {
            const Real ratio = dmag[i] / pmag[i];
            if (ratio > rep.worst_ratio) rep.worst_ratio = ratio;
        }
    }
    for (std::size_t i = 1; i + 1 < dmag.size(); ++i) {
        if (dmag[i] >= dmag[i - 1] && dmag[i] >= dmag[i + 1]) {
            rep.envelope_k.push_back(k_min + static_cast<unsigned>(i));
        }
    }
    const Complex inv = Real(1) / zz;
    const Real a_delta = abs(Real(4) * const_pi() * inv * exp(inv));
    const Real a_pade = a_delta / 2;
    std::vector<unsigned> dks;
    std::vector<Real> dmg;
    for (unsigned k : rep.envelope_k) {
        dks.push_back(k);
        dmg.push_back(dmag[k - k_min]);
    }
    const SlopeFit df = exponent_after_amplitude_removal(dks, dmg, a_delta);
    std::vector<unsigned> pks;
    std::vector<Real> pmg;
    for (unsigned k = std::max(k_min, 10u); k <= std::min(k_max, 60u); ++k) {
        pks.push_back(k);
        pmg.push_back(pmag[k - k_min]);
    }
    const SlopeFit pf = exponent_after_amplitude_removal(pks, pmg, a_pade);
    rep.delta_slope = anchored(df.slope, ctx.digits);
    rep.pade_slope = anchored(pf.slope, ctx.digits);
    rep.slopes_valid = df.points >= 4 && pf.points >= 4;
    return rep;
}

}  // namespace eulersum
