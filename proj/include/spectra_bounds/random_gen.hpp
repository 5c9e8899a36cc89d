#pragma once

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "spectra_bounds/bounds.hpp"
#include "spectra_bounds/errors.hpp"
#include "spectra_bounds/graph.hpp"
#include "spectra_bounds/matrix.hpp"

namespace spectra_bounds {

// G(n, p) with p drawn uniformly from [p_min, p_max], rejection-sampled until
// connected. Deterministic given the generator state.
struct GraphGenConfig {
    std::size_t n_min = 2;
    std::size_t n_max = 8;
    double p_min = 0.3;
    double p_max = 0.9;
    std::size_t max_attempts = 100000;
};

inline Graph random_connected_graph(std::mt19937_64& rng, const GraphGenConfig& cfg = {}) {
    std::uniform_int_distribution<std::size_t> pick_n(cfg.n_min, cfg.n_max);
    std::uniform_real_distribution<double> pick_p(cfg.p_min, cfg.p_max);
    const std::size_t n = pick_n(rng);
    const double p = pick_p(rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    for (std::size_t attempt = 0; attempt < cfg.max_attempts; ++attempt) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (coin(rng) < p) edges.emplace_back(u, v);
        try {
            return Graph::from_edges(n, std::move(edges));
        } catch (const disconnected_graph_error&) {
            continue;
        }
    }
    throw error("random_connected_graph: rejection sampling exhausted");
}

// Random matrix with strictly positive off-diagonal entries (irreducible by
// construction) and entries in [0, entry_max].
struct MatrixGenConfig {
    std::size_t n_min = 2;
    std::size_t n_max = 12;
    double entry_max = 10.0;
    double off_diag_min = 0.01;
};

inline NonnegativeMatrix random_positive_matrix(std::mt19937_64& rng,
                                                const MatrixGenConfig& cfg = {}) {
    std::uniform_int_distribution<std::size_t> pick_n(cfg.n_min, cfg.n_max);
    const std::size_t n = pick_n(rng);
    std::uniform_real_distribution<double> diag(0.0, cfg.entry_max);
    std::uniform_real_distribution<double> off(cfg.off_diag_min, cfg.entry_max);

    std::vector<double> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entries[i * n + j] = i == j ? diag(rng) : off(rng);
    return NonnegativeMatrix(n, std::move(entries));
}

inline ScaleVector random_scale_vector(std::mt19937_64& rng, std::size_t n, double lo = 0.1,
                                       double hi = 10.0) {
    std::uniform_real_distribution<double> pick(lo, hi);
    std::vector<double> c(n);
    for (double& x : c) x = pick(rng);
    return ScaleVector(std::move(c));
}

}  // namespace spectra_bounds
