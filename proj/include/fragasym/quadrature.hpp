#ifndef FRAGASYM_QUADRATURE_HPP
#define FRAGASYM_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace fragasym {

using Complex = std::complex<double>;

struct QuadratureOptions {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;
    int max_subdivisions = 4000;
    // Minimum number of initial panels; raised by callers for oscillatory
    // integrands (e.g. proportional to |Im s| of a Mellin evaluation).
    int min_panels = 1;
};

// Adaptive Gauss-Kronrod (7-15) quadrature of a complex-valued function on
// [a, b]. Throws QuadratureError when the subdivision budget is exhausted
// before the tolerance is met.
Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                  const QuadratureOptions& opts = {});

double integrate_real(const std::function<double(double)>& f, double a, double b,
                      const QuadratureOptions& opts = {});

// Integral over the whole real line of a decaying integrand: the window
// [-w, w] is grown until the added shells are negligible.
Complex integrate_line(const std::function<Complex(double)>& f,
                       double initial_halfwidth = 16.0,
                       const QuadratureOptions& opts = {});

// Nodes/weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Fourth-order Gregory weights (trapezoid with corrected ends) for a uniform
// grid of n points and spacing h. For n < 8 falls back to lower-order rules.
std::vector<double> gregory_weights(int n, double h);

}  // namespace fragasym

#endif
