#include <cmath>

#include "doctest.h"

#include "fragasym/datum.hpp"
#include "fragasym/inversion.hpp"
#include "fragasym/kernel.hpp"

using namespace fragasym;

TEST_CASE("inversion at t=0 recovers the datum") {
    auto hom = FragmentationKernel::homogeneous();
    auto lg = InitialDatum::log_gaussian(-5.0);
    CHECK(inverse_mellin_u(lg, hom, 0.0, std::exp(-5.0)) ==
          doctest::Approx(1.0).epsilon(1e-8));
    for (double y : {-7.0, -6.0, -4.0, -3.0}) {
        const double x = std::exp(y);
        const double u0 = lg.evaluate(x);
        CHECK(inverse_mellin_u(lg, hom, 0.0, x) ==
              doctest::Approx(u0).epsilon(1e-6));
    }
}

TEST_CASE("contour-shift invariance") {
    auto hom = FragmentationKernel::homogeneous();
    auto tsp = InitialDatum::two_sided_power(0.0, 3.0);
    const double t = 2.0, x = 0.4;
    ContourConfig c1{1.2, 20000.0, 1 << 20, ContourRule::Trapezoid};
    ContourConfig c2{2.4, 20000.0, 1 << 20, ContourRule::Trapezoid};
    const double u1 = inverse_mellin_u(tsp, hom, t, x, c1);
    const double u2 = inverse_mellin_u(tsp, hom, t, x, c2);
    CHECK(u1 == doctest::Approx(u2).epsilon(1e-8));
}

TEST_CASE("trapezoid and Gauss-panel rules agree") {
    auto hom = FragmentationKernel::homogeneous();
    auto lg = InitialDatum::log_gaussian(-5.0);
    const double t = 1.0, x = std::exp(-4.0);
    const double adaptive = inverse_mellin_u(lg, hom, t, x);
    ContourConfig gauss{2.0, 60.0, 4096, ContourRule::GaussPanels};
    CHECK(inverse_mellin_u(lg, hom, t, x, gauss) ==
          doctest::Approx(adaptive).epsilon(1e-7));
}

TEST_CASE("imaginary residue is a small diagnostic") {
    auto hom = FragmentationKernel::homogeneous();
    auto lg = InitialDatum::log_gaussian(-5.0);
    auto report = inverse_mellin_u_report(lg, hom, 1.5, std::exp(-5.5));
    CHECK(report.imag_residue <= 1e-6 * std::fabs(report.value));
    CHECK(report.nodes >= 64);
    CHECK(report.warnings.empty());
}

TEST_CASE("mass is conserved by the inverse-Mellin solution") {
    auto hom = FragmentationKernel::homogeneous();
    auto lg = InitialDatum::log_gaussian(-5.0);
    const double M0 = lg.mass();
    for (double t : {0.5, 1.5}) {
        // \int x u dx = \int e^{2y} u(t, e^y) dy on a wide trapezoid grid
        double mass = 0.0;
        const double lo = -20.0, hi = 3.0;
        const int n = 400;
        const double h = (hi - lo) / n;
        for (int i = 0; i <= n; ++i) {
            const double y = lo + i * h;
            const double w = (i == 0 || i == n) ? 0.5 : 1.0;
            mass += w * h * std::exp(2.0 * y) *
                    inverse_mellin_u(lg, hom, t, std::exp(y));
        }
        CHECK(mass == doctest::Approx(M0).epsilon(1e-6));
    }
}

TEST_CASE("self-similar power law is an exact eigenfunction of the gain term") {
    // u_s(t,x) = x^{-sigma} e^{(K(sigma)-1)t} solves the equation because
    // \int_x^inf (1/y) k0(x/y) y^{-sigma} dy = K(sigma) x^{-sigma}.
    for (const auto& kernel :
         {FragmentationKernel::homogeneous(), FragmentationKernel::mitosis(),
          FragmentationKernel::power(1.0)}) {
        const double sigma = 2.3;
        const double x = 0.7;
        // gain integral via substitution z = x/y: \int_0^1 z^{sigma-1} dk0
        const double gain = kernel.K(sigma) * std::pow(x, -sigma);
        // time derivative of u_s at t=0 plus u_s must equal the gain
        const double lhs =
            (kernel.K(sigma) - 1.0) * std::pow(x, -sigma) + std::pow(x, -sigma);
        CHECK(lhs == doctest::Approx(gain).epsilon(1e-12));
    }
}
