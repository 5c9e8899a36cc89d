// Bounds on the four matrices of a small dominating-vertex graph, evaluated
// across a few exponents and compared with the oracle.

#include <cstdio>

#include "spectra_bounds/spectra_bounds.hpp"

using namespace spectra_bounds;

int main() {
    // Two triangles sharing a vertex.
    const Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}});

    std::printf("%-28s %6s %4s %12s %12s %10s\n", "matrix", "alpha", "i", "best upper", "rho",
                "attained");
    for (GraphMatrixKind kind : all_graph_matrix_kinds) {
        const auto oracle = graph_spectral_radius(g, kind);
        for (double alpha : {0.0, 1.0}) {
            const auto m = validate_irreducible(graph_matrix(g, kind));
            const auto best = best_upper_bound(m, graph_scale_vector(g, kind, alpha), oracle);
            std::printf("%-28s %6.2f %4zu %12.6f %12.6f %10s\n",
                        std::string(kind_name(kind)).c_str(), alpha, best.index_i, best.value,
                        oracle.rho, best.equality.holds ? "yes" : "no");
        }
    }
    return 0;
}
