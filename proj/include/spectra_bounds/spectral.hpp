#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "spectra_bounds/errors.hpp"
#include "spectra_bounds/irreducible.hpp"

namespace spectra_bounds {

inline constexpr double default_tolerance = 1e-12;
inline constexpr std::size_t default_max_iterations = 100000;

struct SpectralEstimate {
    double rho = 0.0;                   // spectral radius estimate
    double residual = 0.0;              // ||A v - rho v||_inf at ||v||_inf = 1
    std::size_t iterations = 0;
    std::vector<double> perron_vector;  // strictly positive, ||.||_inf = 1
};

// Power iteration on A + I. The +I shift makes any irreducible nonnegative
// matrix primitive, so the iteration converges from any positive start; the
// Collatz-Wielandt ratios of the shifted matrix bracket rho(A) + 1 and their
// midpoint is returned (shift subtracted).
inline SpectralEstimate spectral_radius(const IrreducibleMatrix& m,
                                        double tol = default_tolerance,
                                        std::size_t max_iter = default_max_iterations) {
    if (!(tol > 0.0)) throw error("spectral_radius: tolerance must be > 0");
    if (max_iter < 1) throw error("spectral_radius: max_iter must be >= 1");

    const std::size_t n = m.size();
    std::vector<double> v(n, 1.0);  // positive start: nonzero Perron component
    std::vector<double> w(n);
    double last_residual = 0.0;

    for (std::size_t it = 1; it <= max_iter; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += m(i, j) * v[j];
            w[i] = s;
        }

        // Collatz-Wielandt enclosure for the shifted matrix: (w_i + v_i) / v_i.
        double lo = (w[0] + v[0]) / v[0];
        double hi = lo;
        for (std::size_t i = 1; i < n; ++i) {
            const double r = (w[i] + v[i]) / v[i];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        const double rho = 0.5 * (lo + hi) - 1.0;

        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            residual = std::max(residual, std::abs(w[i] - rho * v[i]));
        last_residual = residual;

        if (residual <= tol) return SpectralEstimate{rho, residual, it, v};

        // Next iterate: (A + I) v, normalized in the infinity norm. Stays
        // strictly positive because (A + I) v >= v > 0 componentwise.
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            w[i] += v[i];
            norm = std::max(norm, w[i]);
        }
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
    }

    throw no_convergence_error(max_iter, last_residual);
}

}  // namespace spectra_bounds
