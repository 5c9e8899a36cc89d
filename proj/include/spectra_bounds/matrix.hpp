#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "spectra_bounds/errors.hpp"

namespace spectra_bounds {

// Dense square matrix with entrywise-nonnegative entries, immutable after
// construction. Row-major storage.
class NonnegativeMatrix {
public:
    NonnegativeMatrix(std::size_t n, std::vector<double> entries)
        : n_(n), entries_(std::move(entries)) {
        if (n_ == 0) throw invalid_matrix_error("matrix dimension must be >= 1");
        if (entries_.size() != n_ * n_)
            throw invalid_matrix_error("expected " + std::to_string(n_ * n_) +
                                       " entries, got " + std::to_string(entries_.size()));
        for (double x : entries_)
            if (!(x >= 0.0) || !std::isfinite(x))
                throw invalid_matrix_error("matrix entries must be nonnegative finite reals");
    }

    static NonnegativeMatrix from_rows(const std::vector<std::vector<double>>& rows) {
        const std::size_t n = rows.size();
        std::vector<double> flat;
        flat.reserve(n * n);
        for (const auto& row : rows) {
            if (row.size() != n)
                throw invalid_matrix_error("matrix must be square: row has " +
                                           std::to_string(row.size()) + " entries, expected " +
                                           std::to_string(n));
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return NonnegativeMatrix(n, std::move(flat));
    }

    std::size_t size() const noexcept { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    const std::vector<double>& entries() const noexcept { return entries_; }

    double row_sum(std::size_t i) const {
        double s = 0.0;
        for (std::size_t j = 0; j < n_; ++j) s += entries_[i * n_ + j];
        return s;
    }

    std::vector<double> row_sums() const {
        std::vector<double> r(n_);
        for (std::size_t i = 0; i < n_; ++i) r[i] = row_sum(i);
        return r;
    }

    // M = max_i a_ii
    double diag_max() const {
        double m = (*this)(0, 0);
        for (std::size_t i = 1; i < n_; ++i) m = std::max(m, (*this)(i, i));
        return m;
    }

    // S = min_i a_ii
    double diag_min() const {
        double m = (*this)(0, 0);
        for (std::size_t i = 1; i < n_; ++i) m = std::min(m, (*this)(i, i));
        return m;
    }

    bool zero_diagonal() const {
        for (std::size_t i = 0; i < n_; ++i)
            if ((*this)(i, i) != 0.0) return false;
        return true;
    }

private:
    std::size_t n_;
    std::vector<double> entries_;
};

}  // namespace spectra_bounds
