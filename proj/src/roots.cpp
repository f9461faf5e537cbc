#include "fragasym/roots.hpp"

#include <algorithm>
#include <cmath>

#include "fragasym/errors.hpp"

namespace fragasym {

double bisect(const std::function<double(double)>& f, double a, double b,
              const RootOptions& opts) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw RootBracketError("bisect: interval does not bracket a root");
    for (int i = 0; i < opts.max_iterations + 60; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0 || 0.5 * (b - a) < opts.x_tol * std::max(1.0, std::abs(m)) ||
            std::abs(fm) <= opts.f_tol)
            return m;
        if (fa * fm < 0.0) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

double newton_bisect(const std::function<double(double)>& f,
                     const std::function<double(double)>& df, double a, double b,
                     double x0, const RootOptions& opts) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0)
        throw RootBracketError("newton_bisect: interval does not bracket a root");
    double x = std::clamp(x0, a, b);
    for (int i = 0; i < opts.max_iterations; ++i) {
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (fa * fx < 0.0) {
            b = x;
            fb = fx;
        } else {
            a = x;
            fa = fx;
        }
        const double d = df(x);
        double next;
        if (d != 0.0 && std::isfinite(d)) {
            next = x - fx / d;
            if (!(next > a && next < b)) next = 0.5 * (a + b);
        } else {
            next = 0.5 * (a + b);
        }
        if (std::abs(next - x) < opts.x_tol * std::max(1.0, std::abs(next)) ||
            std::abs(fx) <= opts.f_tol)
            return next;
        x = next;
    }
    return x;
}

}  // namespace fragasym
