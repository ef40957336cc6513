#include <cstddef>

#include "eulersum/cli.hpp"
#include "eulersum/errors.hpp"

namespace eulersum {

FitResult fit_exp_model(const std::vector<std::pair<unsigned, Real>>& points,
                        unsigned k_lo, unsigned k_hi,
                        const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx.digits);
    std::vector<Real> ks;
    std::vector<Real> ys;  // log of the magnitude
    for (const auto& p : points) {
        if (p.first < k_lo || p.first > k_hi) continue;
        const Real mag = abs(anchored(p.second, ctx.digits));
        if (mag == 0) continue;
        ks.push_back(Real(p.first));
        ys.push_back(log(mag));
    }
    const std::size_t m = ks.size();
    if (m < 8) {
        throw parameter_error(
            "fit: fewer than 8 usable points in the requested order range");
    }

    // Grid the decay exponent; each candidate reduces to a linear
    // least-squares problem in (log A, -alpha) solved by its 2x2 normal
    // equations.
    FitResult best;
    Real best_residual = -1;
    for (int tick = 0; tick <= 140; ++tick) {
        const Real nu = Real(400 + 5 * tick) / 1000;
        Real s1x = 0;
        Real sxx = 0;
        Real s1y = 0;
        Real sxy = 0;
        std::vector<Real> xs(m);
        for (std::size_t j = 0; j < m; ++j) {
            xs[j] = pow(ks[j], nu);
            s1x += xs[j];
            sxx += xs[j] * xs[j];
            s1y += ys[j];
            sxy += xs[j] * ys[j];
        }
        const Real count = Real(static_cast<unsigned>(m));
        const Real det = count * sxx - s1x * s1x;
        if (det == 0) continue;
        const Real b0 = (sxx * s1y - s1x * sxy) / det;  // log A
        const Real b1 = (count * sxy - s1x * s1y) / det;  // -alpha
        Real ss = 0;
        for (std::size_t j = 0; j < m; ++j) {
            const Real r = ys[j] - b0 - b1 * xs[j];
            ss += r * r;
        }
        const Real residual = sqrt(ss / count);
        if (best_residual < 0 || residual < best_residual) {
            best_residual = residual;
            best.amplitude = exp(b0);
            best.alpha = -b1;
            best.nu = nu;
            best.residual = residual;
        }
    }
    return best;
}

std::vector<std::pair<unsigned, Real>> envelope_points(
    const std::vector<std::pair<unsigned, Real>>& points) {
    std::vector<std::pair<unsigned, Real>> out;
    if (points.size() < 3) return out;
    std::vector<Real> mag(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        mag[i] = abs(points[i].second);
    }
    for (std::size_t i = 1; i + 1 < points.size(); ++i) {
        if (mag[i] >= mag[i - 1] && mag[i] >= mag[i + 1]) {
            out.emplace_back(points[i].first, mag[i]);
        }
    }
    return out;
}

}  // namespace eulersum
