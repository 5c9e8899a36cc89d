#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "spectra_bounds/errors.hpp"
#include "spectra_bounds/irreducible.hpp"
#include "spectra_bounds/spectral.hpp"

namespace spectra_bounds {

// Relative tolerance for deciding that a bound is numerically attained.
inline constexpr double attainment_tolerance = 1e-6;
// Relative tolerance for the structural pattern checks (exact-integer inputs
// in practice; the looser attainment tolerance absorbs formula rounding).
inline constexpr double structural_tolerance = 1e-9;

// Strictly positive scale vector c.
class ScaleVector {
public:
    explicit ScaleVector(std::vector<double> c) : c_(std::move(c)) {
        if (c_.empty()) throw non_positive_scale_error("scale vector must be nonempty");
        for (double x : c_)
            if (!(x > 0.0) || !std::isfinite(x))
                throw non_positive_scale_error("scale vector components must be positive finite");
    }

    static ScaleVector uniform(std::size_t n) { return ScaleVector(std::vector<double>(n, 1.0)); }

    std::size_t size() const noexcept { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    const std::vector<double>& values() const noexcept { return c_; }

private:
    std::vector<double> c_;
};

// Scaled row sums M_i = (1/c_i) sum_j a_ij c_j together with the descending
// sort permutation and the four extremal scalars of Theorems 1 and 2:
//   diag_max = max_i a_ii, diag_min = min_i a_ii,
//   off_max  = max_{i != j} a_ij c_j / c_i, off_min analogous.
struct ScaledProfile {
    std::vector<double> m_values;    // natural (caller) order
    std::vector<std::size_t> order;  // rank r (0-based) -> original index, stable descending
    double diag_max = 0.0;
    double diag_min = 0.0;
    double off_max = 0.0;
    double off_min = 0.0;

    std::size_t size() const noexcept { return m_values.size(); }

    // M value at 1-based rank position (rank 1 = largest).
    double ranked(std::size_t rank) const { return m_values[order[rank - 1]]; }

    // sum_{k=1}^{i-1} (M_k - M_i) in sorted order, 1-based i.
    double deviation_sum(std::size_t i) const {
        const double mi = ranked(i);
        double s = 0.0;
        for (std::size_t k = 1; k < i; ++k) s += ranked(k) - mi;
        return s;
    }
};

inline ScaledProfile scaled_profile(const IrreducibleMatrix& m, const ScaleVector& c) {
    const std::size_t n = m.size();
    if (c.size() != n)
        throw dimension_mismatch_error("scale vector length " + std::to_string(c.size()) +
                                       " does not match matrix dimension " + std::to_string(n));

    ScaledProfile p;
    p.m_values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += m(i, j) * c[j];
        p.m_values[i] = s / c[i];
    }

    p.order.resize(n);
    std::iota(p.order.begin(), p.order.end(), std::size_t{0});
    std::stable_sort(p.order.begin(), p.order.end(),
                     [&](std::size_t a, std::size_t b) { return p.m_values[a] > p.m_values[b]; });

    p.diag_max = m.matrix().diag_max();
    p.diag_min = m.matrix().diag_min();

    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double scaled = m(i, j) * c[j] / c[i];
            if (first) {
                p.off_max = p.off_min = scaled;
                first = false;
            } else {
                p.off_max = std::max(p.off_max, scaled);
                p.off_min = std::min(p.off_min, scaled);
            }
        }
    }
    return p;
}

namespace detail {

// The radicand is >= 0 in exact arithmetic; tiny negatives are rounding.
inline double clamp_radicand(double r) {
    if (r < 0.0 && -r <= 1e-12 * (1.0 + std::abs(r))) return 0.0;
    return r;
}

inline void check_rank_index(const ScaledProfile& p, std::size_t i) {
    if (i < 1 || i > p.size())
        throw index_error("rank index " + std::to_string(i) + " outside 1.." +
                          std::to_string(p.size()));
}

}  // namespace detail

// Upper bound at 1-based rank i:
//   (M_i + M - N + sqrt((M_i - M + N)^2 + 4N sum_{k<i}(M_k - M_i))) / 2
// Requires N > 0; unreachable for validated matrices with n >= 2.
inline double upper_bound_value(const ScaledProfile& p, std::size_t i) {
    detail::check_rank_index(p, i);
    const double N = p.off_max;
    if (!(N > 0.0))
        throw zero_off_diagonal_error("upper bound requires a positive off-diagonal maximum");
    const double M = p.diag_max;
    const double mi = p.ranked(i);
    const double radicand =
        detail::clamp_radicand((mi - M + N) * (mi - M + N) + 4.0 * N * p.deviation_sum(i));
    return 0.5 * (mi + M - N + std::sqrt(radicand));
}

// Lower bound:
//   (M_n + S - T + sqrt((M_n - S + T)^2 + 4T sum_{k<n}(M_k - M_n))) / 2
// T = 0 is permitted; the bound degrades gracefully.
inline double lower_bound_value(const ScaledProfile& p) {
    const double S = p.diag_min;
    const double T = p.off_min;
    const std::size_t n = p.size();
    const double mn = p.ranked(n);
    const double radicand =
        detail::clamp_radicand((mn - S + T) * (mn - S + T) + 4.0 * T * p.deviation_sum(n));
    return 0.5 * (mn + S - T + std::sqrt(radicand));
}

enum class BoundSide { upper, lower };

enum class EqualityBranch { all_equal, structured, not_attained };

// Numeric attainment and matching structural case, reported independently:
// `holds` compares bound against the oracle value; `branch` checks the
// characterization pattern on the matrix itself.
struct EqualityDiagnosis {
    bool holds = false;
    EqualityBranch branch = EqualityBranch::not_attained;
    std::optional<std::size_t> witness_t;  // 1-based rank, set iff branch == structured
};

struct BoundReport {
    double value = 0.0;
    BoundSide side = BoundSide::upper;
    std::size_t index_i = 0;      // 1-based rank position used by the formula
    std::optional<double> alpha;  // filled by the graph-level wrappers
    EqualityDiagnosis equality;
};

namespace detail {

inline bool near(double a, double b, double rel) {
    return std::abs(a - b) <= rel * (1.0 + std::max(std::abs(a), std::abs(b)));
}

// Shared structural characterization. Conditions are checked in sorted-rank
// space (the theorems assume M_1 >= ... >= M_n via permutation similarity):
//   (i)   a_kk = extreme_diag            for ranks k <= t-1
//   (ii)  a_kl c_l / c_k = extreme_off   for all ranks k, l <= t-1, k != l
//   (iii) M_t = ... = M_n
// For the lower side the structured branch additionally requires T > 0.
inline EqualityDiagnosis diagnose(const IrreducibleMatrix& m, const ScaleVector& c,
                                  const ScaledProfile& p, std::size_t t_limit, bool lower_side,
                                  double bound_value, double rho) {
    EqualityDiagnosis d;
    d.holds = std::abs(bound_value - rho) <= attainment_tolerance * (1.0 + std::abs(rho));

    const std::size_t n = p.size();
    if (near(p.ranked(1), p.ranked(n), structural_tolerance)) {
        d.branch = EqualityBranch::all_equal;
        return d;
    }

    const double extreme_diag = lower_side ? p.diag_min : p.diag_max;
    const double extreme_off = lower_side ? p.off_min : p.off_max;
    if (lower_side && !(extreme_off > 0.0)) return d;  // T = 0: characterization silent

    for (std::size_t t = 2; t <= t_limit; ++t) {
        bool ok = true;
        for (std::size_t k = 1; ok && k < t; ++k) {
            const std::size_t orig = p.order[k - 1];
            if (!near(m(orig, orig), extreme_diag, structural_tolerance)) ok = false;
        }
        for (std::size_t k = 1; ok && k <= n; ++k) {
            for (std::size_t l = 1; ok && l < t; ++l) {
                if (k == l) continue;
                const std::size_t row = p.order[k - 1];
                const std::size_t col = p.order[l - 1];
                if (!near(m(row, col) * c[col] / c[row], extreme_off, structural_tolerance))
                    ok = false;
            }
        }
        if (ok && !near(p.ranked(t), p.ranked(n), structural_tolerance)) ok = false;
        if (ok) {
            d.branch = EqualityBranch::structured;
            d.witness_t = t;
            return d;
        }
    }
    return d;
}

}  // namespace detail

inline EqualityDiagnosis equality_diagnosis_upper(const IrreducibleMatrix& m, const ScaleVector& c,
                                                  std::size_t i, double bound_value, double rho) {
    const ScaledProfile p = scaled_profile(m, c);
    detail::check_rank_index(p, i);
    return detail::diagnose(m, c, p, i, false, bound_value, rho);
}

inline EqualityDiagnosis equality_diagnosis_lower(const IrreducibleMatrix& m, const ScaleVector& c,
                                                  double bound_value, double rho) {
    const ScaledProfile p = scaled_profile(m, c);
    return detail::diagnose(m, c, p, p.size(), true, bound_value, rho);
}

inline BoundReport upper_bound(const IrreducibleMatrix& m, const ScaleVector& c, std::size_t i,
                               const SpectralEstimate& oracle) {
    const ScaledProfile p = scaled_profile(m, c);
    const double value = upper_bound_value(p, i);
    BoundReport r{value, BoundSide::upper, i, std::nullopt, {}};
    r.equality = detail::diagnose(m, c, p, i, false, value, oracle.rho);
    return r;
}

inline BoundReport upper_bound(const IrreducibleMatrix& m, const ScaleVector& c, std::size_t i) {
    return upper_bound(m, c, i, spectral_radius(m));
}

inline BoundReport lower_bound(const IrreducibleMatrix& m, const ScaleVector& c,
                               const SpectralEstimate& oracle) {
    const ScaledProfile p = scaled_profile(m, c);
    const double value = lower_bound_value(p);
    BoundReport r{value, BoundSide::lower, p.size(), std::nullopt, {}};
    r.equality = detail::diagnose(m, c, p, p.size(), true, value, oracle.rho);
    return r;
}

inline BoundReport lower_bound(const IrreducibleMatrix& m, const ScaleVector& c) {
    return lower_bound(m, c, spectral_radius(m));
}

// Row-sum specializations: c = all-ones.
inline BoundReport upper_bound_rowsum(const IrreducibleMatrix& m, std::size_t i,
                                      const SpectralEstimate& oracle) {
    return upper_bound(m, ScaleVector::uniform(m.size()), i, oracle);
}

inline BoundReport upper_bound_rowsum(const IrreducibleMatrix& m, std::size_t i) {
    return upper_bound_rowsum(m, i, spectral_radius(m));
}

// Zero-diagonal specialization; the diagonal term vanishes so the row-sum
// formula reduces to it exactly.
inline BoundReport upper_bound_zero_diag(const IrreducibleMatrix& m, std::size_t i,
                                         const SpectralEstimate& oracle) {
    if (!m.matrix().zero_diagonal())
        throw non_zero_diagonal_error("zero-diagonal bound requires all a_ii = 0");
    return upper_bound_rowsum(m, i, oracle);
}

inline BoundReport upper_bound_zero_diag(const IrreducibleMatrix& m, std::size_t i) {
    return upper_bound_zero_diag(m, i, spectral_radius(m));
}

inline BoundReport lower_bound_rowsum(const IrreducibleMatrix& m, const SpectralEstimate& oracle) {
    return lower_bound(m, ScaleVector::uniform(m.size()), oracle);
}

inline BoundReport lower_bound_rowsum(const IrreducibleMatrix& m) {
    return lower_bound_rowsum(m, spectral_radius(m));
}

// Minimum of the upper bound over i = 1..n; ties resolved to the smallest i.
inline BoundReport best_upper_bound(const IrreducibleMatrix& m, const ScaleVector& c,
                                    const SpectralEstimate& oracle) {
    const ScaledProfile p = scaled_profile(m, c);
    std::size_t best_i = 1;
    double best = upper_bound_value(p, 1);
    for (std::size_t i = 2; i <= p.size(); ++i) {
        const double v = upper_bound_value(p, i);
        if (v < best) {
            best = v;
            best_i = i;
        }
    }
    BoundReport r{best, BoundSide::upper, best_i, std::nullopt, {}};
    r.equality = detail::diagnose(m, c, p, best_i, false, best, oracle.rho);
    return r;
}

inline BoundReport best_upper_bound(const IrreducibleMatrix& m, const ScaleVector& c) {
    return best_upper_bound(m, c, spectral_radius(m));
}

}  // namespace spectra_bounds
