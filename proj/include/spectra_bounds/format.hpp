#pragma once

#include <cstdio>
#include <string>

namespace spectra_bounds {

// Shortest %g rendering at the given number of significant digits. CSV and
// JSON output use 12; the human-readable table uses 6.
inline std::string format_significant(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

}  // namespace spectra_bounds
