#pragma once

// Test-only spectral-radius oracle, independent of the power-iteration path:
// characteristic polynomial coefficients by the Faddeev-LeVerrier recurrence,
// then the largest real root isolated by Sturm-sequence bisection. For a
// nonnegative matrix the spectral radius is an eigenvalue, so it is exactly
// that largest real root.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "spectra_bounds/matrix.hpp"

namespace oracle {

// Coefficients low-to-high: p(x) = c[0] + c[1] x + ... + c[n] x^n, monic.
inline std::vector<double> char_poly_coeffs(const spectra_bounds::NonnegativeMatrix& a) {
    const std::size_t n = a.size();
    std::vector<double> m(n * n, 0.0);   // running M_k
    std::vector<double> next(n * n, 0.0);
    std::vector<double> coeffs(n + 1, 0.0);
    coeffs[n] = 1.0;

    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1.0;  // M_0 = I
    double ck = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        // next = A * (M_{k-1} + c_{k-1} I); at k = 1 the added term is A itself.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double s = 0.0;
                for (std::size_t l = 0; l < n; ++l) s += a(i, l) * m[l * n + j];
                next[i * n + j] = s;
            }
        double trace = 0.0;
        for (std::size_t i = 0; i < n; ++i) trace += next[i * n + i];
        ck = -trace / static_cast<double>(k);
        coeffs[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m[i * n + j] = next[i * n + j] + (i == j ? ck : 0.0);
    }
    return coeffs;
}

namespace detail {

inline double eval(const std::vector<double>& p, double x) {
    double acc = 0.0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

inline std::vector<double> derivative(const std::vector<double>& p) {
    std::vector<double> d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<double>(k));
    if (d.empty()) d.push_back(0.0);
    return d;
}

inline void trim(std::vector<double>& p) {
    double scale = 0.0;
    for (double c : p) scale = std::max(scale, std::abs(c));
    while (p.size() > 1 && std::abs(p.back()) <= 1e-14 * scale) p.pop_back();
}

// Remainder of u / v, sign-flipped, rescaled to unit max coefficient
// (positive rescaling preserves Sturm sign sequences).
inline std::vector<double> neg_rem(std::vector<double> u, const std::vector<double>& v) {
    while (u.size() >= v.size() && u.size() > 1) {
        const double q = u.back() / v.back();
        const std::size_t shift = u.size() - v.size();
        for (std::size_t k = 0; k < v.size(); ++k) u[k + shift] -= q * v[k];
        u.pop_back();
        trim(u);
        if (u.size() == 1 && u[0] == 0.0) break;
    }
    for (double& c : u) c = -c;
    double scale = 0.0;
    for (double c : u) scale = std::max(scale, std::abs(c));
    if (scale > 0.0)
        for (double& c : u) c /= scale;
    return u;
}

inline std::vector<std::vector<double>> sturm_chain(const std::vector<double>& p) {
    std::vector<std::vector<double>> chain;
    chain.push_back(p);
    chain.push_back(derivative(p));
    trim(chain.back());
    while (chain.back().size() > 1) {
        auto r = neg_rem(chain[chain.size() - 2], chain.back());
        trim(r);
        if (r.size() == 1 && r[0] == 0.0) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sign_variations(const std::vector<std::vector<double>>& chain, double x) {
    // Counting is ill-defined when x lands exactly on a root of a chain
    // element (bisection midpoints do hit integer roots). Intervals are open
    // on the left, so nudge the evaluation point just above x.
    for (int attempt = 0; attempt < 4; ++attempt) {
        int variations = 0;
        int last = 0;
        bool exact_zero = false;
        for (const auto& p : chain) {
            const double y = eval(p, x);
            if (y == 0.0) {
                exact_zero = true;
                break;
            }
            const int s = y > 0.0 ? 1 : -1;
            if (last != 0 && s != last) ++variations;
            last = s;
        }
        if (!exact_zero) return variations;
        x += std::max(1e-13, 1e-13 * std::abs(x));
    }
    // Give up nudging; fall back to the skip-zeros convention.
    int variations = 0;
    int last = 0;
    for (const auto& p : chain) {
        const double y = eval(p, x);
        const int s = y > 0.0 ? 1 : (y < 0.0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

}  // namespace detail

// Largest real root of the (monic) characteristic polynomial by bisection on
// Sturm root counts over (-R, R]. R defaults to a Cauchy coefficient bound; a
// tighter enclosing radius may be passed instead.
inline double largest_real_root(const std::vector<double>& coeffs, double radius = 0.0) {
    double bound = radius;
    if (!(bound > 0.0)) {
        for (std::size_t k = 0; k + 1 < coeffs.size(); ++k)
            bound = std::max(bound, std::abs(coeffs[k]));
        bound += 1.0;
    }

    const auto chain = detail::sturm_chain(coeffs);
    double lo = -bound, hi = bound;
    const int v_hi = detail::sign_variations(chain, hi);
    for (int step = 0; step < 200; ++step) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;  // interval no longer splits
        if (detail::sign_variations(chain, mid) - v_hi >= 1)
            lo = mid;  // at least one root stays in (mid, hi]
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

inline double spectral_radius_charpoly(const spectra_bounds::NonnegativeMatrix& a) {
    // Every eigenvalue has modulus at most the maximum row sum, so all real
    // roots live in [-(R-1), R-1] with R below.
    double max_row_sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) max_row_sum = std::max(max_row_sum, a.row_sum(i));
    return largest_real_root(char_poly_coeffs(a), max_row_sum + 1.0);
}

}  // namespace oracle
