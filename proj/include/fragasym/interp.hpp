#ifndef FRAGASYM_INTERP_HPP
#define FRAGASYM_INTERP_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace fragasym {

// Cubic (4-point Lagrange) interpolation of values on a uniform grid
// y_i = y0 + i*dy. Points outside the grid evaluate to zero, matching the
// absorbing-boundary convention of the log-grid scheme.
inline double interp_cubic_uniform(const std::vector<double>& values, double y0,
                                   double dy, double y) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(values.size());
    if (n == 0) return 0.0;
    const double u = (y - y0) / dy;
    if (u < 0.0 || u > static_cast<double>(n - 1)) return 0.0;
    if (n < 4) {  // linear fallback on tiny grids
        const std::ptrdiff_t i = std::min<std::ptrdiff_t>(
            static_cast<std::ptrdiff_t>(u), n - 2);
        const double f = u - static_cast<double>(i);
        return values[i] * (1.0 - f) + values[i + 1] * f;
    }
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(std::floor(u));
    // Center the 4-point stencil [i-1, i+2] inside the grid.
    std::ptrdiff_t j = i - 1;
    if (j < 0) j = 0;
    if (j > n - 4) j = n - 4;
    const double f = u - static_cast<double>(j);  // in [?, ?] relative to node j
    const double f0 = f, f1 = f - 1.0, f2 = f - 2.0, f3 = f - 3.0;
    const double w0 = -f1 * f2 * f3 / 6.0;
    const double w1 = f0 * f2 * f3 / 2.0;
    const double w2 = -f0 * f1 * f3 / 2.0;
    const double w3 = f0 * f1 * f2 / 6.0;
    return w0 * values[j] + w1 * values[j + 1] + w2 * values[j + 2] +
           w3 * values[j + 3];
}

}  // namespace fragasym

#endif
