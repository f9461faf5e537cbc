#include "fragasym/rational.hpp"

#include <cmath>
#include <numeric>

namespace fragasym {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / std::gcd(a, b) * b;
}

RationalFit best_rational(double x, std::int64_t max_den, double tol) {
    RationalFit best;
    best.error = std::abs(x);

    // Continued-fraction expansion; track convergents p/q.
    double v = x;
    std::int64_t p_prev = 1, q_prev = 0;
    std::int64_t p = 0, q = 1;  // convergent -1 as 0/1 start is folded below
    p = static_cast<std::int64_t>(std::floor(v));
    q = 1;
    double frac = v - std::floor(v);
    best.num = p;
    best.den = 1;
    best.error = std::abs(x - static_cast<double>(p));

    for (int i = 0; i < 64; ++i) {
        if (frac < 1e-15) break;
        v = 1.0 / frac;
        const double fl = std::floor(v);
        if (fl > 9.0e18) break;
        const std::int64_t a = static_cast<std::int64_t>(fl);
        frac = v - fl;
        const std::int64_t pn = a * p + p_prev;
        const std::int64_t qn = a * q + q_prev;
        if (qn > max_den || qn <= 0) break;
        p_prev = p;
        q_prev = q;
        p = pn;
        q = qn;
        const double err = std::abs(x - static_cast<double>(p) / static_cast<double>(q));
        if (err < best.error) {
            best.num = p;
            best.den = q;
            best.error = err;
        }
        if (err == 0.0) break;
    }

    best.found = best.error < tol && best.den <= max_den;
    const double scale = best.error * static_cast<double>(best.den) * static_cast<double>(best.den);
    best.decisive = best.found && scale < 1e-6;
    return best;
}

}  // namespace fragasym
