#ifndef FRAGASYM_ROOTS_HPP
#define FRAGASYM_ROOTS_HPP

#include <functional>

namespace fragasym {

struct RootOptions {
    double x_tol = 1e-14;
    double f_tol = 0.0;
    int max_iterations = 200;
};

// Bisection on a bracketing interval [a, b] with f(a) * f(b) <= 0.
double bisect(const std::function<double(double)>& f, double a, double b,
              const RootOptions& opts = {});

// Newton iteration safeguarded by a bracketing interval: steps that leave
// [a, b] or fail to shrink the bracket fast enough fall back to bisection.
// Requires f(a) * f(b) <= 0; df is the derivative.
double newton_bisect(const std::function<double(double)>& f,
                     const std::function<double(double)>& df, double a, double b,
                     double x0, const RootOptions& opts = {});

}  // namespace fragasym

#endif
