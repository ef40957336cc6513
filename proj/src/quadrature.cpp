#include "eulersum/quadrature.hpp"

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace eulersum {
namespace {

struct Node {
    Real t;            // abscissa
    Real one_minus_t;  // 1-t on (0,1), cancellation-free; unused on (0,inf)
    Real w;            // weight without the step factor h
};

using LevelKey = std::tuple<int, unsigned, unsigned>;  // domain, digits, level

// Truncation point of the u-grid.  Beyond it the double-exponential decay
// exp(-c exp|u|) has pushed node contributions far below 10^-digits.
Real grid_extent(unsigned digits) {
    const Real ln10 = log(Real(10));
    return asinh(Real(3) * digits * ln10 / const_pi()) + 1;
}

Node make_node(Domain dom, const Real& u) {
    const Real pi = const_pi();
    Node n;
    if (dom == Domain::unit_interval) {
        // t = 1/(1+e^{-pi sinh u}),  1-t = 1/(1+e^{pi sinh u}),
        // w = pi cosh(u) t (1-t) = pi cosh(u)/(2 + e^{pi sinh u} + e^{-pi sinh u}).
        const Real s = pi * sinh(u);
        const Real ep = exp(s);
        const Real em = exp(-s);
        n.t = 1 / (1 + em);
        n.one_minus_t = 1 / (1 + ep);
        n.w = pi * cosh(u) / (2 + ep + em);
    } else {
        // t = e^{(pi/2) sinh u},  w = (pi/2) cosh(u) t.
        const Real half_pi = pi / 2;
        n.t = exp(half_pi * sinh(u));
        n.one_minus_t = 0;
        n.w = half_pi * cosh(u) * n.t;
    }
    return n;
}

// Nodes newly introduced at the given refinement level: the full grid at
// spacing 1 for level 0, odd multiples of 2^-level afterwards.
const std::vector<Node>& level_nodes(Domain dom, unsigned digits,
                                     unsigned level) {
    thread_local std::map<LevelKey, std::vector<Node>> cache;
    const LevelKey key{static_cast<int>(dom), digits, level};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    ScopedPrecision guard(digits);
    const Real umax = grid_extent(digits);
    std::vector<Node> nodes;
    if (level == 0) {
        for (long j = 0; Real(j) <= umax; ++j) {
            nodes.push_back(make_node(dom, Real(j)));
            if (j > 0) nodes.push_back(make_node(dom, Real(-j)));
        }
    } else {
        const Real h = pow(Real(2), -static_cast<int>(level));
        for (long j = 1; Real(j) * h <= umax; j += 2) {
            nodes.push_back(make_node(dom, Real(j) * h));
            nodes.push_back(make_node(dom, Real(-j) * h));
        }
    }
    return cache.emplace(key, std::move(nodes)).first->second;
}

}  // namespace

Complex quad(const QuadratureProblem& p, const PrecisionContext& ctx) {
    // Guard digits absorb trapezoid-sum rounding; results are re-anchored.
    const unsigned work = ctx.digits + 15;
    ScopedPrecision guard(work);
    const Real tol = p.target_rel_tol > 0 ? anchored(p.target_rel_tol, work)
                                          : anchored(ctx.quad_rel_tol, work);

    constexpr unsigned max_level = 12;
    Complex total;
    Real achieved = -1;
    Real h = 1;
    for (unsigned level = 0; level <= max_level; ++level) {
        Complex fresh;
        for (const Node& n : level_nodes(p.domain, work, level)) {
            fresh += n.w * p.integrand(n.t, n.one_minus_t);
        }
        if (level == 0) {
            total = fresh;
            continue;
        }
        h /= 2;
        const Complex refined = total / Real(2) + fresh * h;
        const Real change = abs(refined - total);
        const Real scale = abs(refined);
        total = refined;
        // Successive-level agreement is a conservative estimate: the error
        // of the finer level is roughly the square of the change.
        if (level >= 2) {
            if (scale == 0 && change == 0) return Complex(Real(0));
            if (scale > 0) {
                achieved = change / scale;
                if (achieved <= tol) return anchored(total, ctx.digits);
            }
        }
    }
    throw quadrature_error("quadrature failed to reach target tolerance",
                           achieved < 0 ? "unknown" : achieved.str(5));
}

}  // namespace eulersum
