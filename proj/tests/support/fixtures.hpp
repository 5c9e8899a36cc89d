#pragma once

// Shared fixtures: concrete instances whose bound values are pinned in the
// test suites.

#include "spectra_bounds/graph.hpp"
#include "spectra_bounds/matrix.hpp"

namespace fixtures {

// 5x5 zero-diagonal matrix whose rank-3 row-sum upper bound (6 + sqrt(244))/2
// is attained exactly even though the row sums are not flat from the top
// (r = 12, 11, 10, 10, 10).
inline spectra_bounds::NonnegativeMatrix tight_5x5() {
    return spectra_bounds::NonnegativeMatrix::from_rows({{0, 4, 2, 3, 3},
                                                         {4, 0, 2, 2, 3},
                                                         {4, 4, 0, 1, 1},
                                                         {4, 4, 1, 0, 1},
                                                         {4, 4, 1, 1, 0}});
}

inline const char* tight_5x5_text() {
    return "5\n"
           "0 4 2 3 3\n"
           "4 0 2 2 3\n"
           "4 4 0 1 1\n"
           "4 4 1 0 1\n"
           "4 4 1 1 0\n";
}

// Two triangles sharing a vertex: one dominating vertex of degree 4, all
// others of degree 2. Attains the signless Laplacian bound at alpha = 1.
inline spectra_bounds::Graph butterfly_graph() {
    return spectra_bounds::Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}});
}

inline const char* butterfly_edge_list() {
    return "5\n1 2\n1 3\n1 4\n1 5\n2 3\n4 5\n";
}

// K_{1,3} with every edge subdivided: the smallest non-regular graph whose
// average neighbor degree is constant (= 2 everywhere).
inline spectra_bounds::Graph subdivided_star() {
    return spectra_bounds::Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
}

inline spectra_bounds::Graph k4_minus_edge() {
    return spectra_bounds::Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

}  // namespace fixtures
