#include "eulersum/transforms.hpp"

#include <sstream>

namespace eulersum {
namespace {

Real digit_floor(unsigned digits, int slack) {
    return pow(Real(10), slack - static_cast<long>(digits));
}

std::vector<Complex> anchored_all(const std::vector<Complex>& v,
                                  unsigned digits) {
    std::vector<Complex> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(anchored(x, digits));
    return out;
}

void check_beta(const Real& beta) {
    if (!(beta > 0)) throw parameter_error("beta must be positive");
}

// Coefficient c in X_{k+1}^(m) = X_k^(m+1) - c X_k^(m).  At k = 0 every
// family reduces to a plain forward difference, which also sidesteps the
// 0/0 the pochhammer formula would produce at beta + m = 1.
Real recursion_coefficient(WeightFamily family, const Real& beta, unsigned m,
                           unsigned k) {
    if (k == 0 || family == WeightFamily::constant) return Real(1);
    const Real bm = beta + m;
    if (family == WeightFamily::power)
        return bm * pow(bm + k, static_cast<int>(k) - 1) /
               pow(bm + k + 1, static_cast<int>(k));
    return (bm + k) * (bm + k - 1) / ((bm + 2 * k) * (bm + 2 * k - 1));
}

const char* method_name(RationalMethod m) {
    switch (m) {
        case RationalMethod::delta: return "delta";
        case RationalMethod::d: return "d";
        case RationalMethod::drummond_pade: return "drummond-pade";
    }
    return "";
}

WeightFamily method_family(RationalMethod m) {
    switch (m) {
        case RationalMethod::delta: return WeightFamily::pochhammer;
        case RationalMethod::d: return WeightFamily::power;
        case RationalMethod::drummond_pade: return WeightFamily::constant;
    }
    return WeightFamily::constant;
}

}  // namespace

SequenceWindow make_window(const std::vector<Complex>& s_full,
                           const std::vector<Complex>& omega_full, unsigned n,
                           unsigned k) {
    if (s_full.size() < static_cast<std::size_t>(n) + k + 1 ||
        omega_full.size() < static_cast<std::size_t>(n) + k + 1)
        throw parameter_error("window needs entries n .. n+k of s and omega");
    SequenceWindow w;
    w.base_index = n;
    w.s.assign(s_full.begin() + n, s_full.begin() + n + k + 1);
    w.omega.assign(omega_full.begin() + n, omega_full.begin() + n + k + 1);
    for (const auto& om : w.omega)
        if (om == Complex(0))
            throw parameter_error("zero remainder estimate in window");
    return w;
}

SequenceWindow make_delta_window(const std::vector<Complex>& s_full, unsigned n,
                                 unsigned k) {
    if (s_full.size() < static_cast<std::size_t>(n) + k + 2)
        throw parameter_error(
            "difference-based window needs entries n .. n+k+1 of s");
    SequenceWindow w;
    w.base_index = n;
    w.s.assign(s_full.begin() + n, s_full.begin() + n + k + 1);
    w.omega.reserve(k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        Complex d = s_full[n + j + 1] - s_full[n + j];
        if (d == Complex(0)) {
            std::ostringstream msg;
            msg << "zero remainder estimate: s_" << (n + j + 1) << " equals s_"
                << (n + j);
            throw breakdown_error(msg.str());
        }
        w.omega.push_back(d);
    }
    return w;
}

Complex levin_type(const TransformSpec& spec, const SequenceWindow& w,
                   unsigned k, const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    check_beta(spec.beta);
    if (w.s.size() != w.omega.size() ||
        w.s.size() != static_cast<std::size_t>(k) + 1)
        throw parameter_error("window must hold exactly k+1 entries");
    const auto sums = detail::binomial_sums<Complex, Real>(
        spec.family, anchored(spec.beta, ctx.digits), k, w.base_index,
        anchored_all(w.s, ctx.digits), anchored_all(w.omega, ctx.digits), 0);
    const Real den_mag = abs(sums.denominator);
    if (den_mag <= digit_floor(ctx.digits, 5) * sums.max_denominator_term) {
        std::ostringstream msg;
        msg << "unstable denominator at order " << k << ", base index "
            << w.base_index << ": sum lost all significant digits";
        throw breakdown_error(msg.str());
    }
    return anchored(sums.numerator / sums.denominator, ctx.digits);
}

Complex levin_l(const Real& beta, unsigned k, unsigned n,
                const std::vector<Complex>& s,
                const std::vector<Complex>& omega,
                const PrecisionContext& ctx) {
    return levin_type({WeightFamily::power, beta, RemainderRule::explicit_omega},
                      make_window(s, omega, n, k), k, ctx);
}

Complex weniger_s(const Real& beta, unsigned k, unsigned n,
                  const std::vector<Complex>& s,
                  const std::vector<Complex>& omega,
                  const PrecisionContext& ctx) {
    return levin_type(
        {WeightFamily::pochhammer, beta, RemainderRule::explicit_omega},
        make_window(s, omega, n, k), k, ctx);
}

Complex drummond(unsigned k, unsigned n, const std::vector<Complex>& s,
                 const std::vector<Complex>& omega,
                 const PrecisionContext& ctx) {
    return levin_type(
        {WeightFamily::constant, Real(1), RemainderRule::explicit_omega},
        make_window(s, omega, n, k), k, ctx);
}

Complex d_variant(const Real& beta, unsigned k, unsigned n,
                  const std::vector<Complex>& s, const PrecisionContext& ctx) {
    return levin_type({WeightFamily::power, beta, RemainderRule::delta_s},
                      make_delta_window(s, n, k), k, ctx);
}

Complex delta_variant(const Real& beta, unsigned k, unsigned n,
                      const std::vector<Complex>& s,
                      const PrecisionContext& ctx) {
    return levin_type({WeightFamily::pochhammer, beta, RemainderRule::delta_s},
                      make_delta_window(s, n, k), k, ctx);
}

Complex levin_type_recursive(WeightFamily family, const Real& beta, unsigned k,
                             unsigned n, const std::vector<Complex>& s,
                             const std::vector<Complex>& omega,
                             const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    check_beta(beta);
    if (s.size() < static_cast<std::size_t>(n) + k + 1 ||
        omega.size() < static_cast<std::size_t>(n) + k + 1)
        throw parameter_error(
            "recursive evaluation needs entries n .. n+k of s and omega");
    const Real b = anchored(beta, ctx.digits);
    std::vector<Complex> num(k + 1), den(k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        const Complex om = anchored(omega[n + j], ctx.digits);
        if (om == Complex(0))
            throw parameter_error("zero remainder estimate in window");
        num[j] = anchored(s[n + j], ctx.digits) / om;
        den[j] = Real(1) / om;
    }
    for (unsigned step = 0; step < k; ++step) {
        for (unsigned j = 0; j + step < k; ++j) {
            const Real c = recursion_coefficient(family, b, n + j, step);
            num[j] = num[j + 1] - c * num[j];
            den[j] = den[j + 1] - c * den[j];
        }
    }
    if (den[0] == Complex(0))
        throw breakdown_error("recursive denominator vanished");
    return anchored(num[0] / den[0], ctx.digits);
}

RationalApproximant rational_form(RationalMethod method, const Real& beta,
                                  unsigned k, unsigned n,
                                  const std::vector<Complex>& gamma,
                                  const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    check_beta(beta);
    const auto coeffs = detail::rational_coeffs<Complex, Real>(
        method_family(method), anchored(beta, ctx.digits), k, n,
        anchored_all(gamma, ctx.digits));
    RationalApproximant out;
    out.numerator_coeffs = coeffs.num;
    out.denominator_coeffs = coeffs.den;
    out.method = method_name(method);
    out.k = k;
    out.n = n;
    return out;
}

Complex evaluate_polynomial(const std::vector<Complex>& coeffs,
                            const Complex& z) {
    if (coeffs.empty()) return Complex(0);
    Complex p = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) p = p * z + coeffs[i];
    return p;
}

Complex evaluate(const RationalApproximant& r, const Complex& z,
                 const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    const Complex zz = anchored(z, ctx.digits);
    const Complex den = evaluate_polynomial(r.denominator_coeffs, zz);
    if (den == Complex(0))
        throw breakdown_error("rational approximant denominator vanishes here");
    return anchored(evaluate_polynomial(r.numerator_coeffs, zz) / den,
                    ctx.digits);
}

const Complex& EpsilonTable::value(unsigned k, unsigned n) const {
    if (k > depth || n > depth - k)
        throw parameter_error("epsilon table index outside triangle");
    return columns[k][n];
}

EpsilonTable wynn_epsilon(const std::vector<Complex>& s, unsigned depth,
                          const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    if (s.size() < static_cast<std::size_t>(depth) + 1)
        throw parameter_error("epsilon table of given depth needs depth+1 terms");
    EpsilonTable table;
    table.depth = depth;
    table.columns.resize(depth + 1);
    table.columns[0].reserve(depth + 1);
    for (unsigned n = 0; n <= depth; ++n)
        table.columns[0].push_back(anchored(s[n], ctx.digits));
    const Real rel_floor = digit_floor(ctx.digits, 5);
    for (unsigned k = 1; k <= depth; ++k) {
        auto& col = table.columns[k];
        const auto& prev = table.columns[k - 1];
        col.reserve(depth - k + 1);
        for (unsigned n = 0; n <= depth - k; ++n) {
            const Complex diff = prev[n + 1] - prev[n];
            const Real scale = abs(prev[n + 1]) + abs(prev[n]);
            if (abs(diff) <= rel_floor * scale) {
                std::ostringstream msg;
                msg << "epsilon recursion breakdown computing entry (" << k
                    << ", " << n << "): consecutive column-" << (k - 1)
                    << " values coincide";
                throw epsilon_breakdown(msg.str(), k, n);
            }
            Complex entry = Real(1) / diff;
            if (k >= 2) entry += table.columns[k - 2][n + 1];
            col.push_back(entry);
        }
    }
    return table;
}

}  // namespace eulersum
