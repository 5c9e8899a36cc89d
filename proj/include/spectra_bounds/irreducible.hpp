#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "spectra_bounds/errors.hpp"
#include "spectra_bounds/matrix.hpp"

namespace spectra_bounds {

namespace detail {

// BFS over the support digraph (edge k -> l iff a_kl > 0), optionally on the
// transposed digraph. Returns the reached-vertex mask from `start`.
inline std::vector<bool> support_reachable(const NonnegativeMatrix& m, std::size_t start,
                                           bool transpose) {
    const std::size_t n = m.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> queue;
    queue.reserve(n);
    seen[start] = true;
    queue.push_back(start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t u = queue[head];
        for (std::size_t v = 0; v < n; ++v) {
            const double a = transpose ? m(v, u) : m(u, v);
            if (a > 0.0 && !seen[v]) {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    return seen;
}

}  // namespace detail

// One ordered pair (k, l), 0-based, with no directed path k -> l in the
// support digraph; nullopt when the matrix is irreducible.
inline std::optional<std::pair<std::size_t, std::size_t>> find_unreachable_pair(
    const NonnegativeMatrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return std::nullopt;
    const auto forward = detail::support_reachable(m, 0, false);
    for (std::size_t v = 0; v < n; ++v)
        if (!forward[v]) return std::make_pair(std::size_t{0}, v);
    const auto backward = detail::support_reachable(m, 0, true);
    for (std::size_t v = 0; v < n; ++v)
        if (!backward[v]) return std::make_pair(v, std::size_t{0});
    return std::nullopt;
}

// True iff the support digraph has exactly one strongly connected component.
inline bool strongly_connected(const NonnegativeMatrix& m) {
    return !find_unreachable_pair(m).has_value();
}

// A NonnegativeMatrix whose support digraph has been verified strongly
// connected. Only obtainable through validate_irreducible.
class IrreducibleMatrix {
public:
    const NonnegativeMatrix& matrix() const noexcept { return m_; }
    std::size_t size() const noexcept { return m_.size(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    friend IrreducibleMatrix validate_irreducible(NonnegativeMatrix m);

private:
    explicit IrreducibleMatrix(NonnegativeMatrix m) : m_(std::move(m)) {}
    NonnegativeMatrix m_;
};

// Enforces the irreducibility precondition. n = 1 counts as irreducible.
inline IrreducibleMatrix validate_irreducible(NonnegativeMatrix m) {
    if (auto pair = find_unreachable_pair(m))
        throw reducible_matrix_error(pair->first + 1, pair->second + 1);
    return IrreducibleMatrix(std::move(m));
}

}  // namespace spectra_bounds
