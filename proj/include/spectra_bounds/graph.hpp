#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectra_bounds/errors.hpp"
#include "spectra_bounds/matrix.hpp"

namespace spectra_bounds {

// Simple connected undirected graph on vertices 0..n-1. Vertex labels are
// 1-based in the text format only.
class Graph {
public:
    // Validates simplicity (no loops, no duplicates) and connectivity.
    static Graph from_edges(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
        if (n == 0) throw error("graph must have at least one vertex");
        Graph g;
        g.n_ = n;
        g.adjacency_.assign(n * n, false);
        g.neighbors_.resize(n);
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw error("edge endpoint out of range: " + std::to_string(u + 1) + " " +
                            std::to_string(v + 1));
            if (u == v) throw loop_edge_error(u + 1);
            if (u > v) std::swap(u, v);
            if (g.adjacency_[u * n + v]) throw duplicate_edge_error(u + 1, v + 1);
            g.adjacency_[u * n + v] = g.adjacency_[v * n + u] = true;
            g.edges_.emplace_back(u, v);
        }
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (g.adjacency_[u * n + v]) g.neighbors_[u].push_back(v);

        // Connectivity check: BFS from vertex 0.
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> queue{0};
        seen[0] = true;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (std::size_t v : g.neighbors_[queue[head]])
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
        for (std::size_t v = 0; v < n; ++v)
            if (!seen[v]) throw disconnected_graph_error(v + 1);
        return g;
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u * n_ + v]; }
    std::size_t degree(std::size_t v) const { return neighbors_[v].size(); }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return neighbors_[v]; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept {
        return edges_;
    }

    std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> d(n_);
        for (std::size_t v = 0; v < n_; ++v) d[v] = degree(v);
        return d;
    }

private:
    std::size_t n_ = 0;
    std::vector<bool> adjacency_;
    std::vector<std::vector<std::size_t>> neighbors_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// Edge-list text format: line 1 is n; each later nonempty line is "u v" with
// 1 <= u < v <= n; lines starting with '#' are comments.
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> edge_lines;

    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;

        std::istringstream fields(line);
        if (!n) {
            long long value = 0;
            std::string trailing;
            if (!(fields >> value) || value < 1)
                throw parse_error("expected vertex count", line_no);
            if (fields >> trailing) throw parse_error("unexpected token '" + trailing + "'", line_no);
            n = static_cast<std::size_t>(value);
            continue;
        }

        long long u = 0, v = 0;
        std::string trailing;
        if (!(fields >> u >> v)) throw parse_error("expected edge 'u v'", line_no);
        if (fields >> trailing) throw parse_error("unexpected token '" + trailing + "'", line_no);
        if (u < 1 || v < 1 || u > static_cast<long long>(*n) || v > static_cast<long long>(*n))
            throw parse_error("vertex label outside 1.." + std::to_string(*n), line_no);
        if (u == v) throw loop_edge_error(static_cast<std::size_t>(u), line_no);
        if (u > v) throw parse_error("edges must be written with u < v", line_no);
        edges.emplace_back(static_cast<std::size_t>(u) - 1, static_cast<std::size_t>(v) - 1);
        edge_lines.push_back(line_no);
    }

    if (!n) throw parse_error("empty input: expected vertex count");

    // Re-run duplicate detection here to attach line numbers.
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t k = 0; k < edges.size(); ++k)
        if (!seen.insert(edges[k]).second)
            throw duplicate_edge_error(edges[k].first + 1, edges[k].second + 1, edge_lines[k]);

    return Graph::from_edges(*n, std::move(edges));
}

// Named families used throughout tests and demos.
inline Graph complete_graph(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, std::move(e));
}

inline Graph path_graph(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph::from_edges(n, std::move(e));
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    e.emplace_back(0, n - 1);
    return Graph::from_edges(n, std::move(e));
}

// Star K_{1, n-1} with the center at vertex 0.
inline Graph star_graph(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t v = 1; v < n; ++v) e.emplace_back(0, v);
    return Graph::from_edges(n, std::move(e));
}

inline NonnegativeMatrix adjacency_matrix(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<double> a(n * n, 0.0);
    for (auto [u, v] : g.edges()) a[u * n + v] = a[v * n + u] = 1.0;
    return NonnegativeMatrix(n, std::move(a));
}

// Q(G) = D(G) + A(G)
inline NonnegativeMatrix signless_laplacian(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<double> q(n * n, 0.0);
    for (auto [u, v] : g.edges()) q[u * n + v] = q[v * n + u] = 1.0;
    for (std::size_t v = 0; v < n; ++v) q[v * n + v] = static_cast<double>(g.degree(v));
    return NonnegativeMatrix(n, std::move(q));
}

namespace detail {

// x^alpha with exponent 0 and 1 short-circuited so the integer-valued cases
// stay bit-clean.
inline double alpha_power(double base, double alpha) {
    if (alpha == 0.0) return 1.0;
    if (alpha == 1.0) return base;
    return std::pow(base, alpha);
}

}  // namespace detail

// Degrees plus the alpha-parameterized average-degree vector
//   (^a m)_i = sum_{j ~ i} d_j^a / d_i^a
// and the adjacency-side scale ratio N = max_{i ~ j} d_j^a / d_i^a.
struct DegreeData {
    std::vector<std::size_t> degrees;
    std::size_t max_degree = 0;
    double alpha = 0.0;
    std::vector<double> alpha_avg;
    double neighbor_ratio_max = 0.0;
};

inline DegreeData generalized_average_degree(const Graph& g, double alpha) {
    const std::size_t n = g.size();
    DegreeData data;
    data.degrees = g.degrees();
    data.max_degree = *std::max_element(data.degrees.begin(), data.degrees.end());
    data.alpha = alpha;
    data.alpha_avg.resize(n);

    std::vector<double> powers(n);
    for (std::size_t v = 0; v < n; ++v)
        powers[v] = detail::alpha_power(static_cast<double>(data.degrees[v]), alpha);

    for (std::size_t v = 0; v < n; ++v) {
        double s = 0.0;
        for (std::size_t u : g.neighbors(v)) s += powers[u];
        data.alpha_avg[v] = s / powers[v];
    }

    bool first = true;
    for (auto [u, v] : g.edges()) {
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            const double ratio = powers[b] / powers[a];
            data.neighbor_ratio_max = first ? ratio : std::max(data.neighbor_ratio_max, ratio);
            first = false;
        }
    }
    return data;
}

// All-pairs BFS distances, transmissions, diameter, and (when alpha is set)
// the alpha-parameterized average-transmission vector
//   (^a M)_i = sum_j d_ij D_j^a / D_i^a
// with the extremal scaled entries over ordered pairs i != j.
struct TransmissionData {
    std::vector<std::vector<std::size_t>> dist;
    std::vector<std::size_t> transmissions;
    std::size_t diameter = 0;
    std::optional<double> alpha;
    std::vector<double> alpha_avg;
    double scaled_off_max = 0.0;  // N of the distance-side upper bounds
    double scaled_off_min = 0.0;  // T of the distance-side lower bounds

    NonnegativeMatrix matrix() const {
        const std::size_t n = dist.size();
        std::vector<double> d(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i * n + j] = static_cast<double>(dist[i][j]);
        return NonnegativeMatrix(n, std::move(d));
    }
};

inline TransmissionData distance_matrix(const Graph& g) {
    const std::size_t n = g.size();
    TransmissionData data;
    data.dist.assign(n, std::vector<std::size_t>(n, 0));
    data.transmissions.assign(n, 0);

    std::vector<std::size_t> queue;
    for (std::size_t src = 0; src < n; ++src) {
        auto& row = data.dist[src];
        std::vector<bool> seen(n, false);
        queue.assign(1, src);
        seen[src] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t u = queue[head];
            for (std::size_t v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = true;
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
        }
        for (std::size_t v = 0; v < n; ++v) {
            data.transmissions[src] += row[v];
            data.diameter = std::max(data.diameter, row[v]);
        }
    }
    return data;
}

inline TransmissionData generalized_average_transmission(const Graph& g, double alpha) {
    TransmissionData data = distance_matrix(g);
    const std::size_t n = g.size();
    data.alpha = alpha;
    data.alpha_avg.resize(n);

    std::vector<double> powers(n);
    for (std::size_t v = 0; v < n; ++v)
        powers[v] = detail::alpha_power(static_cast<double>(data.transmissions[v]), alpha);

    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += static_cast<double>(data.dist[i][j]) * powers[j];
        data.alpha_avg[i] = s / powers[i];
    }

    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double scaled = static_cast<double>(data.dist[i][j]) * powers[j] / powers[i];
            if (first) {
                data.scaled_off_max = data.scaled_off_min = scaled;
                first = false;
            } else {
                data.scaled_off_max = std::max(data.scaled_off_max, scaled);
                data.scaled_off_min = std::min(data.scaled_off_min, scaled);
            }
        }
    }
    return data;
}

// DQ(G) = Tr(G) + D(G): transmission diagonal plus distance matrix.
inline NonnegativeMatrix distance_signless_laplacian(const Graph& g) {
    TransmissionData data = distance_matrix(g);
    const std::size_t n = g.size();
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i * n + j] = static_cast<double>(data.dist[i][j]) +
                           (i == j ? static_cast<double>(data.transmissions[i]) : 0.0);
    return NonnegativeMatrix(n, std::move(m));
}

}  // namespace spectra_bounds
