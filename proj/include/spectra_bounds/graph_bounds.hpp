#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "spectra_bounds/bounds.hpp"
#include "spectra_bounds/errors.hpp"
#include "spectra_bounds/graph.hpp"
#include "spectra_bounds/irreducible.hpp"
#include "spectra_bounds/spectral.hpp"

namespace spectra_bounds {

enum class GraphMatrixKind {
    adjacency,
    signless_laplacian,
    distance,
    distance_signless_laplacian,
};

inline constexpr GraphMatrixKind all_graph_matrix_kinds[] = {
    GraphMatrixKind::adjacency,
    GraphMatrixKind::signless_laplacian,
    GraphMatrixKind::distance,
    GraphMatrixKind::distance_signless_laplacian,
};

inline std::string_view kind_name(GraphMatrixKind kind) {
    switch (kind) {
        case GraphMatrixKind::adjacency: return "adjacency";
        case GraphMatrixKind::signless_laplacian: return "signless-laplacian";
        case GraphMatrixKind::distance: return "distance";
        case GraphMatrixKind::distance_signless_laplacian: return "distance-signless-laplacian";
    }
    return "unknown";
}

inline NonnegativeMatrix graph_matrix(const Graph& g, GraphMatrixKind kind) {
    switch (kind) {
        case GraphMatrixKind::adjacency: return adjacency_matrix(g);
        case GraphMatrixKind::signless_laplacian: return signless_laplacian(g);
        case GraphMatrixKind::distance: return distance_matrix(g).matrix();
        case GraphMatrixKind::distance_signless_laplacian:
            return distance_signless_laplacian(g);
    }
    throw error("unknown graph matrix kind");
}

// Scale vector (d_1^a, ..., d_n^a) used by the adjacency and signless
// Laplacian bounds.
inline ScaleVector degree_power_scale(const Graph& g, double alpha) {
    std::vector<double> c(g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
        c[v] = detail::alpha_power(static_cast<double>(g.degree(v)), alpha);
    return ScaleVector(std::move(c));
}

// Scale vector (D_1^a, ..., D_n^a) used by the distance-side bounds.
inline ScaleVector transmission_power_scale(const Graph& g, double alpha) {
    const auto data = distance_matrix(g);
    std::vector<double> c(g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
        c[v] = detail::alpha_power(static_cast<double>(data.transmissions[v]), alpha);
    return ScaleVector(std::move(c));
}

inline ScaleVector graph_scale_vector(const Graph& g, GraphMatrixKind kind, double alpha) {
    switch (kind) {
        case GraphMatrixKind::adjacency:
        case GraphMatrixKind::signless_laplacian: return degree_power_scale(g, alpha);
        case GraphMatrixKind::distance:
        case GraphMatrixKind::distance_signless_laplacian:
            return transmission_power_scale(g, alpha);
    }
    throw error("unknown graph matrix kind");
}

namespace detail {

inline void require_bound_ready(const Graph& g) {
    if (g.size() < 2) throw error("graph bounds require n >= 2");
}

inline BoundReport graph_upper_impl(const Graph& g, GraphMatrixKind kind, double alpha,
                                    std::size_t i, const SpectralEstimate& oracle) {
    require_bound_ready(g);
    const IrreducibleMatrix m = validate_irreducible(graph_matrix(g, kind));
    BoundReport r = upper_bound(m, graph_scale_vector(g, kind, alpha), i, oracle);
    r.alpha = alpha;
    return r;
}

inline BoundReport graph_lower_impl(const Graph& g, GraphMatrixKind kind, double alpha,
                                    const SpectralEstimate& oracle) {
    require_bound_ready(g);
    const IrreducibleMatrix m = validate_irreducible(graph_matrix(g, kind));
    BoundReport r = lower_bound(m, graph_scale_vector(g, kind, alpha), oracle);
    r.alpha = alpha;
    return r;
}

}  // namespace detail

inline SpectralEstimate graph_spectral_radius(const Graph& g, GraphMatrixKind kind,
                                              double tol = default_tolerance,
                                              std::size_t max_iter = default_max_iterations) {
    return spectral_radius(validate_irreducible(graph_matrix(g, kind)), tol, max_iter);
}

// rho(A(G)) upper bound from the generalized average degrees.
inline BoundReport adjacency_upper(const Graph& g, double alpha, std::size_t i,
                                   const SpectralEstimate& oracle) {
    return detail::graph_upper_impl(g, GraphMatrixKind::adjacency, alpha, i, oracle);
}

inline BoundReport adjacency_upper(const Graph& g, double alpha, std::size_t i) {
    return adjacency_upper(g, alpha, i,
                           graph_spectral_radius(g, GraphMatrixKind::adjacency));
}

// Average-degree specialization (alpha = 1).
inline BoundReport adjacency_upper_avg(const Graph& g, std::size_t i,
                                       const SpectralEstimate& oracle) {
    return adjacency_upper(g, 1.0, i, oracle);
}

inline BoundReport adjacency_upper_avg(const Graph& g, std::size_t i) {
    return adjacency_upper(g, 1.0, i);
}

// rho(Q(G)) upper bound; the scaled row sums are (^a m)_i + d_i.
inline BoundReport signless_upper(const Graph& g, double alpha, std::size_t i,
                                  const SpectralEstimate& oracle) {
    return detail::graph_upper_impl(g, GraphMatrixKind::signless_laplacian, alpha, i, oracle);
}

inline BoundReport signless_upper(const Graph& g, double alpha, std::size_t i) {
    return signless_upper(g, alpha, i,
                          graph_spectral_radius(g, GraphMatrixKind::signless_laplacian));
}

// rho(D(G)) upper bound from the generalized average transmissions.
inline BoundReport distance_upper(const Graph& g, double alpha, std::size_t i,
                                  const SpectralEstimate& oracle) {
    return detail::graph_upper_impl(g, GraphMatrixKind::distance, alpha, i, oracle);
}

inline BoundReport distance_upper(const Graph& g, double alpha, std::size_t i) {
    return distance_upper(g, alpha, i, graph_spectral_radius(g, GraphMatrixKind::distance));
}

// Average-transmission specialization (alpha = 1).
inline BoundReport distance_upper_avg(const Graph& g, std::size_t i,
                                      const SpectralEstimate& oracle) {
    return distance_upper(g, 1.0, i, oracle);
}

inline BoundReport distance_upper_avg(const Graph& g, std::size_t i) {
    return distance_upper(g, 1.0, i);
}

// rho(D(G)) lower bound.
inline BoundReport distance_lower(const Graph& g, double alpha, const SpectralEstimate& oracle) {
    return detail::graph_lower_impl(g, GraphMatrixKind::distance, alpha, oracle);
}

inline BoundReport distance_lower(const Graph& g, double alpha) {
    return distance_lower(g, alpha, graph_spectral_radius(g, GraphMatrixKind::distance));
}

// rho(DQ(G)) upper bound; scaled row sums (^a M)_i + D_i, diagonal max D_i.
inline BoundReport dsl_upper(const Graph& g, double alpha, std::size_t i,
                             const SpectralEstimate& oracle) {
    return detail::graph_upper_impl(g, GraphMatrixKind::distance_signless_laplacian, alpha, i,
                                    oracle);
}

inline BoundReport dsl_upper(const Graph& g, double alpha, std::size_t i) {
    return dsl_upper(g, alpha, i,
                     graph_spectral_radius(g, GraphMatrixKind::distance_signless_laplacian));
}

// rho(DQ(G)) lower bound.
inline BoundReport dsl_lower(const Graph& g, double alpha, const SpectralEstimate& oracle) {
    return detail::graph_lower_impl(g, GraphMatrixKind::distance_signless_laplacian, alpha,
                                    oracle);
}

inline BoundReport dsl_lower(const Graph& g, double alpha) {
    return dsl_lower(g, alpha,
                     graph_spectral_radius(g, GraphMatrixKind::distance_signless_laplacian));
}

// Lower bound dispatcher. The distance kinds carry alpha-parameterized lower
// bounds; for the adjacency and signless Laplacian kinds the row-sum lower
// bound (c = all-ones) is the one on offer, independent of alpha.
inline BoundReport graph_lower(const Graph& g, GraphMatrixKind kind, double alpha,
                               const SpectralEstimate& oracle) {
    switch (kind) {
        case GraphMatrixKind::distance: return distance_lower(g, alpha, oracle);
        case GraphMatrixKind::distance_signless_laplacian: return dsl_lower(g, alpha, oracle);
        case GraphMatrixKind::adjacency:
        case GraphMatrixKind::signless_laplacian: {
            detail::require_bound_ready(g);
            return lower_bound_rowsum(validate_irreducible(graph_matrix(g, kind)), oracle);
        }
    }
    throw error("unknown graph matrix kind");
}

inline BoundReport graph_upper(const Graph& g, GraphMatrixKind kind, double alpha, std::size_t i,
                               const SpectralEstimate& oracle) {
    return detail::graph_upper_impl(g, kind, alpha, i, oracle);
}

enum class GraphClass {
    complete,
    regular,
    star_like,             // x_1 = n-1 > x_2 = ... = x_n
    bidegreed_dominating,  // x_1 = ... = x_{t-1} = n-1 > x_t = ... = x_n, t >= 3
    pseudo_regular,        // average vector constant
    none,
};

inline std::string_view class_name(GraphClass c) {
    switch (c) {
        case GraphClass::complete: return "complete";
        case GraphClass::regular: return "regular";
        case GraphClass::star_like: return "star-like";
        case GraphClass::bidegreed_dominating: return "bidegreed-dominating";
        case GraphClass::pseudo_regular: return "pseudo-regular";
        case GraphClass::none: return "none";
    }
    return "unknown";
}

struct GraphClassification {
    GraphClass cls = GraphClass::none;
    std::optional<std::size_t> witness_t;  // boundary rank for the dominating patterns
    // Whether the detected structure is an equality class of the requested
    // (kind, alpha) bound family.
    bool matches_equality_class = false;
};

// Structural classifier used to cross-check equality diagnoses. For the
// adjacency/signless kinds the data are degrees and average degrees; for the
// distance kinds, transmissions and average transmissions (a transmission of
// n-1 marks a vertex adjacent to all others).
inline GraphClassification structural_equality_class(const Graph& g, double alpha,
                                                     GraphMatrixKind kind) {
    const std::size_t n = g.size();
    const bool degree_side = kind == GraphMatrixKind::adjacency ||
                             kind == GraphMatrixKind::signless_laplacian;

    std::vector<double> data(n);
    std::vector<double> avg(n);
    if (degree_side) {
        const DegreeData d = generalized_average_degree(g, 1.0);
        for (std::size_t v = 0; v < n; ++v) data[v] = static_cast<double>(d.degrees[v]);
        avg = d.alpha_avg;
    } else {
        const TransmissionData t = generalized_average_transmission(g, 1.0);
        for (std::size_t v = 0; v < n; ++v) data[v] = static_cast<double>(t.transmissions[v]);
        avg = t.alpha_avg;
    }

    std::vector<double> sorted = data;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const double dominant = static_cast<double>(n - 1);
    const auto eq = [](double a, double b) { return detail::near(a, b, structural_tolerance); };

    const bool all_equal = eq(sorted.front(), sorted.back());
    const bool all_dominant = all_equal && eq(sorted.front(), dominant);

    GraphClassification result;
    if (all_dominant) {
        result.cls = GraphClass::complete;
    } else if (all_equal) {
        result.cls = GraphClass::regular;
    } else {
        // Count leading entries equal to n-1, then require the tail constant.
        std::size_t lead = 0;
        while (lead < n && eq(sorted[lead], dominant)) ++lead;
        const bool tail_constant = lead < n && eq(sorted[lead], sorted.back());
        if (lead >= 1 && tail_constant) {
            result.cls = lead == 1 ? GraphClass::star_like : GraphClass::bidegreed_dominating;
            result.witness_t = lead + 1;
        } else if (eq(*std::max_element(avg.begin(), avg.end()),
                      *std::min_element(avg.begin(), avg.end()))) {
            result.cls = GraphClass::pseudo_regular;
        }
    }

    // Per-(kind, alpha) equality-class membership. The all-M_i-equal branch is
    // always an equality class, so evaluate the actual sort keys at alpha.
    std::vector<double> m_keys(n);
    if (degree_side) {
        const DegreeData d = generalized_average_degree(g, alpha);
        for (std::size_t v = 0; v < n; ++v)
            m_keys[v] = d.alpha_avg[v] +
                        (kind == GraphMatrixKind::signless_laplacian
                             ? static_cast<double>(d.degrees[v])
                             : 0.0);
    } else {
        const TransmissionData t = generalized_average_transmission(g, alpha);
        for (std::size_t v = 0; v < n; ++v)
            m_keys[v] = t.alpha_avg[v] +
                        (kind == GraphMatrixKind::distance_signless_laplacian
                             ? static_cast<double>(t.transmissions[v])
                             : 0.0);
    }
    const bool keys_equal = eq(*std::max_element(m_keys.begin(), m_keys.end()),
                               *std::min_element(m_keys.begin(), m_keys.end()));

    if (keys_equal || result.cls == GraphClass::complete) {
        result.matches_equality_class = true;
    } else if (degree_side) {
        if (alpha == 0.0)
            result.matches_equality_class = result.cls == GraphClass::star_like ||
                                            result.cls == GraphClass::bidegreed_dominating;
        else if (alpha > 0.0)
            result.matches_equality_class = result.cls == GraphClass::star_like;
        // alpha < 0: only complete qualifies, handled above.
    }
    return result;
}

}  // namespace spectra_bounds
