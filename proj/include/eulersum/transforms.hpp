#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eulersum/errors.hpp"
#include "eulersum/exact.hpp"
#include "eulersum/precision.hpp"

namespace eulersum {

// ---------------------------------------------------------------------------
// Sequence transformations.
//
// All engines here accelerate (or sum) a sequence {s_n} given remainder
// estimates {omega_n}: the generic ratio of binomial sums
//
//   T_k^(n) = [ sum_j (-1)^j C(k,j) W_j s_{n+j}/omega_{n+j} ]
//           / [ sum_j (-1)^j C(k,j) W_j       1/omega_{n+j} ]
//
// with annihilation weights W_j that are normalized ratios
//
//   power:      W_j = ((beta+n+j)/(beta+n+k))^(k-1)
//   pochhammer: W_j = (beta+n+j)_{k-1} / (beta+n+k)_{k-1}
//   constant:   W_j = 1
//
// so that every summand stays O(s/omega) no matter how large k gets.  The
// normalization cancels between numerator and denominator, so the value is
// the classical one.  Wynn's epsilon recursion lives here too.
// ---------------------------------------------------------------------------

// Which weight polynomial annihilates the modeled correction term:
//   power      -> truncated inverse power series  sum c_j/(beta+n)^j
//   pochhammer -> truncated factorial series      sum c_j/(beta+n)_j
//   constant   -> plain polynomial                sum c_j (beta+n)^j
enum class WeightFamily { power, pochhammer, constant };

// How the remainder estimates were obtained.  With delta_s the window was
// built from forward differences omega_n = s_{n+1} - s_n.
enum class RemainderRule { explicit_omega, delta_s };

struct TransformSpec {
    WeightFamily family = WeightFamily::pochhammer;
    Real beta = Real(1);
    RemainderRule remainder_rule = RemainderRule::explicit_omega;
};

// A contiguous slice s_n .. s_{n+k} of a sequence together with the matching
// remainder estimates.  base_index is n; it enters the weights as beta+n+j.
struct SequenceWindow {
    std::vector<Complex> s;
    std::vector<Complex> omega;
    unsigned base_index = 0;
};

// Slice k+1 entries starting at n out of full (0-based) sequences.  Throws
// parameter_error if the inputs are too short or any omega entry is zero.
SequenceWindow make_window(const std::vector<Complex>& s_full,
                           const std::vector<Complex>& omega_full, unsigned n,
                           unsigned k);

// Same, but with omega_j = s_{j+1} - s_j (needs s_n .. s_{n+k+1}).  A zero
// difference is a data degeneracy, not a caller mistake, and throws
// breakdown_error.
SequenceWindow make_delta_window(const std::vector<Complex>& s_full, unsigned n,
                                 unsigned k);

// The generic engine.  Window must hold exactly k+1 entries.  Throws
// breakdown_error when the denominator sum has lost all significant digits
// (modulus <= 10^(5-digits) times the largest summand).
Complex levin_type(const TransformSpec& spec, const SequenceWindow& w,
                   unsigned k, const PrecisionContext& ctx);

// Named wrappers over full 0-based sequences; they read entries n .. n+k.
Complex levin_l(const Real& beta, unsigned k, unsigned n,
                const std::vector<Complex>& s, const std::vector<Complex>& omega,
                const PrecisionContext& ctx);
Complex weniger_s(const Real& beta, unsigned k, unsigned n,
                  const std::vector<Complex>& s,
                  const std::vector<Complex>& omega,
                  const PrecisionContext& ctx);
Complex drummond(unsigned k, unsigned n, const std::vector<Complex>& s,
                 const std::vector<Complex>& omega,
                 const PrecisionContext& ctx);

// Variants with omega_n = s_{n+1} - s_n baked in; they read s_n .. s_{n+k+1}.
// d_variant is the power family, delta_variant the pochhammer family.
Complex d_variant(const Real& beta, unsigned k, unsigned n,
                  const std::vector<Complex>& s, const PrecisionContext& ctx);
Complex delta_variant(const Real& beta, unsigned k, unsigned n,
                      const std::vector<Complex>& s,
                      const PrecisionContext& ctx);

// Independent second evaluation path: numerator and denominator built by the
// classical two-sequence recurrences
//   X_{k+1}^(m) = X_k^(m+1) - c(family, beta, m, k) X_k^(m),
//   X_0^(m) = s_m/omega_m  (numerator)  or  1/omega_m  (denominator),
// with c = 1 (constant), (beta+m)(beta+m+k)^(k-1)/(beta+m+k+1)^k (power),
// (beta+m+k)(beta+m+k-1)/[(beta+m+2k)(beta+m+2k-1)] (pochhammer).  Kept
// deliberately separate from the binomial-sum path for cross-checking.
Complex levin_type_recursive(WeightFamily family, const Real& beta, unsigned k,
                             unsigned n, const std::vector<Complex>& s,
                             const std::vector<Complex>& omega,
                             const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Rational (polynomial-ratio) forms.
//
// When s_n are the partial sums f_n(z) = sum_{m<=n} gamma_m z^m of a power
// series and omega_n = Delta s_n = gamma_{n+1} z^{n+1}, the transformation is
// a ratio of explicit polynomials in z: multiply both sums by z^{n+k+1} and
// the j-th summand carries z^{k-j}/gamma_{n+j+1}.  Numerator degree n+k,
// denominator degree k.
// ---------------------------------------------------------------------------

enum class RationalMethod { delta, d, drummond_pade };

struct RationalApproximant {
    std::vector<Complex> numerator_coeffs;    // ascending degree, size n+k+1
    std::vector<Complex> denominator_coeffs;  // ascending degree, size k+1
    std::string method;
    unsigned k = 0;
    unsigned n = 0;
};

// Build the coefficient lists from gamma_0 .. gamma_{n+k+1}.  Throws
// parameter_error if the list is short or any gamma_{n+j+1} dividing a
// weight vanishes.
RationalApproximant rational_form(RationalMethod method, const Real& beta,
                                  unsigned k, unsigned n,
                                  const std::vector<Complex>& gamma,
                                  const PrecisionContext& ctx);

// Horner evaluation, coefficients in ascending degree.
Complex evaluate_polynomial(const std::vector<Complex>& coeffs,
                            const Complex& z);

// Ratio value at z; throws breakdown_error on a vanishing denominator.
Complex evaluate(const RationalApproximant& r, const Complex& z,
                 const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Wynn's epsilon algorithm.
// ---------------------------------------------------------------------------

// Raised when eps_k^(n+1) - eps_k^(n) underflows all significant digits while
// computing entry (k, n) of the next column; carries that entry's location.
struct epsilon_breakdown : breakdown_error {
    unsigned k;
    unsigned n;
    epsilon_breakdown(const std::string& what, unsigned k_, unsigned n_)
        : breakdown_error(what), k(k_), n(n_) {}
};

// Triangular table eps_k^(n) for k + n <= depth, built by
//   eps_{-1}^(n) = 0,  eps_0^(n) = s_n,
//   eps_{k+1}^(n) = eps_{k-1}^(n+1) + 1/(eps_k^(n+1) - eps_k^(n)).
// Even columns accelerate; when s_n are partial sums of a power series,
// eps_{2k}^(n) is the [k+n/k] Pade approximant.
struct EpsilonTable {
    unsigned depth = 0;
    std::vector<std::vector<Complex>> columns;  // columns[k][n], n <= depth-k

    // Bounds-checked element access; throws parameter_error outside the
    // triangle.
    const Complex& value(unsigned k, unsigned n) const;

    // eps_{2k}^(n), the [k+n/k] entry.
    const Complex& pade(unsigned k, unsigned n) const { return value(2 * k, n); }

    // The staircase [0/0], [1/0], [1/1], [2/1], ...: element nu is
    // eps_{2*floor(nu/2)}^(nu mod 2).
    const Complex& staircase(unsigned nu) const {
        return value(2 * (nu / 2), nu % 2);
    }
};

EpsilonTable wynn_epsilon(const std::vector<Complex>& s, unsigned depth,
                          const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Templated core, exposed so tests can run the identical algorithm in exact
// rational arithmetic.  T is the sequence scalar (Complex, Rational), B the
// weight scalar (Real for Complex sequences, Rational for Rational ones).
// ---------------------------------------------------------------------------
namespace detail {

inline Real magnitude(const Complex& v) { return abs(v); }
inline Rational magnitude(const Rational& v) {
    return v < 0 ? Rational(-v) : v;
}

// Normalized weight W_j; every factor is <= 1 for j <= k.
template <typename B>
B normalized_weight(WeightFamily family, const B& beta, unsigned n, unsigned k,
                    unsigned j) {
    B w(1);
    if (k < 2 || family == WeightFamily::constant) return w;
    const long base = static_cast<long>(n) + static_cast<long>(j);
    const long top = static_cast<long>(n) + static_cast<long>(k);
    if (family == WeightFamily::power) {
        const B ratio = (beta + B(base)) / (beta + B(top));
        for (unsigned i = 0; i + 1 < k; ++i) w *= ratio;
    } else {
        for (unsigned i = 0; i + 1 < k; ++i) {
            const long shift = static_cast<long>(i);
            w *= (beta + B(base + shift)) / (beta + B(top + shift));
        }
    }
    return w;
}

template <typename T>
struct BinomialSums {
    T numerator;
    T denominator;
    decltype(magnitude(std::declval<T>())) max_denominator_term;
};

// The two binomial sums over the window s[offset..offset+k],
// omega[offset..offset+k]; weight index j pairs with beta+n+j.
template <typename T, typename B>
BinomialSums<T> binomial_sums(WeightFamily family, const B& beta, unsigned k,
                              unsigned n, const std::vector<T>& s,
                              const std::vector<T>& omega,
                              std::size_t offset) {
    if (s.size() < offset + k + 1 || omega.size() < offset + k + 1)
        throw parameter_error(
            "sequence window needs k+1 entries from the base index");
    BinomialSums<T> out{T(0), T(0), magnitude(T(0))};
    for (unsigned j = 0; j <= k; ++j) {
        const T& om = omega[offset + j];
        if (om == T(0))
            throw parameter_error("zero remainder estimate in window");
        B w = normalized_weight<B>(family, beta, n, k, j) *
              B(binomial_exact(k, j));
        if (j % 2 != 0) w = -w;
        const T den_term = w * (T(1) / om);
        const T num_term = w * (s[offset + j] / om);
        out.numerator += num_term;
        out.denominator += den_term;
        const auto m = magnitude(den_term);
        if (m > out.max_denominator_term) out.max_denominator_term = m;
    }
    return out;
}

template <typename T>
struct RationalCoeffs {
    std::vector<T> num;  // ascending, degree n+k
    std::vector<T> den;  // ascending, degree k
};

// Polynomial-ratio coefficients from series coefficients gamma.  The j-th
// summand contributes its weight to z^(k-j) in the denominator and, once per
// series term gamma_m, to z^(k-j+m) in the numerator.
template <typename T, typename B>
RationalCoeffs<T> rational_coeffs(WeightFamily family, const B& beta,
                                  unsigned k, unsigned n,
                                  const std::vector<T>& gamma) {
    if (gamma.size() < static_cast<std::size_t>(n) + k + 2)
        throw parameter_error(
            "rational form needs series coefficients gamma_0 .. gamma_{n+k+1}");
    RationalCoeffs<T> out;
    out.num.assign(n + k + 1, T(0));
    out.den.assign(k + 1, T(0));
    for (unsigned j = 0; j <= k; ++j) {
        const T& g = gamma[n + j + 1];
        if (g == T(0))
            throw parameter_error(
                "zero series coefficient inside a remainder weight");
        B w = normalized_weight<B>(family, beta, n, k, j) *
              B(binomial_exact(k, j));
        if (j % 2 != 0) w = -w;
        const T scaled = w * (T(1) / g);
        out.den[k - j] += scaled;
        for (unsigned m = 0; m <= n + j; ++m)
            out.num[k - j + m] += scaled * gamma[m];
    }
    return out;
}

}  // namespace detail

}  // namespace eulersum
