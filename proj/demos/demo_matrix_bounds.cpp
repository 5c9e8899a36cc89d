// Row-sum bounds on a 5x5 matrix whose rank-3 upper bound is attained
// exactly, printed for every rank.

#include <cstdio>

#include "spectra_bounds/spectra_bounds.hpp"

using namespace spectra_bounds;

int main() {
    const auto m = validate_irreducible(NonnegativeMatrix::from_rows({{0, 4, 2, 3, 3},
                                                                      {4, 0, 2, 2, 3},
                                                                      {4, 4, 0, 1, 1},
                                                                      {4, 4, 1, 0, 1},
                                                                      {4, 4, 1, 1, 0}}));
    const auto oracle = spectral_radius(m);
    std::printf("rho = %.10f  (power iteration, %zu iterations)\n\n", oracle.rho,
                oracle.iterations);

    std::printf("%4s %14s %14s %10s\n", "i", "upper bound", "gap", "attained");
    for (std::size_t i = 1; i <= m.size(); ++i) {
        const auto r = upper_bound_rowsum(m, i, oracle);
        std::printf("%4zu %14.10f %14.3e %10s\n", i, r.value, r.value - oracle.rho,
                    r.equality.holds ? "yes" : "no");
    }

    const auto low = lower_bound_rowsum(m, oracle);
    std::printf("\nlower bound = %.10f (gap %.3e)\n", low.value, low.value - oracle.rho);
    return 0;
}
