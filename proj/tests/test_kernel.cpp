#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"

#include "fragasym/errors.hpp"
#include "fragasym/kernel.hpp"
#include "fragasym/quadrature.hpp"
#include "fragasym/rational.hpp"
#include "fragasym/roots.hpp"

using namespace fragasym;

TEST_CASE("mellin closed forms") {
    auto hom = FragmentationKernel::homogeneous();
    CHECK(hom.K(2.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(hom.K(4.0) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(hom.K(1.0) == doctest::Approx(2.0).epsilon(1e-13));

    auto mito = FragmentationKernel::mitosis();
    CHECK(mito.K(1.0) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(mito.K(2.0) == doctest::Approx(1.0).epsilon(1e-13));

    auto pw = FragmentationKernel::power(1.0);  // k0 = 3z, K(s) = 3/(s+1)
    CHECK(pw.K(2.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(pw.K(5.0) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("mellin derivatives") {
    auto hom = FragmentationKernel::homogeneous();
    CHECK(hom.dK(2.0) == doctest::Approx(-0.5).epsilon(1e-13));
    auto mito = FragmentationKernel::mitosis();
    CHECK(mito.dK(2.0) == doctest::Approx(-std::log(2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(hom.mellin_derivative(Complex(2.0, 0.0), 4), DomainError);
}

TEST_CASE("finite-difference derivative check shows O(h^2) agreement") {
    std::vector<FragmentationKernel> kernels = {
        FragmentationKernel::homogeneous(), FragmentationKernel::mitosis(),
        FragmentationKernel::power(0.5),
        FragmentationKernel::atoms({{0.3, 2.0 / 0.3 * 0.25}, {0.7, 2.0 / 0.7 * 0.25},
                                    {0.5, 2.0}})};
    for (auto& k : kernels) {
        const double s = 2.5;
        auto err_at = [&](double h) {
            const double fd = (k.K(s + h) - k.K(s - h)) / (2.0 * h);
            return std::fabs(fd - k.dK(s));
        };
        const double e3 = err_at(1e-3), e4 = err_at(1e-4);
        CHECK(e3 < 1e-5);
        if (e4 > 1e-13)  // ratio only meaningful above roundoff
            CHECK(e3 / e4 == doctest::Approx(100.0).epsilon(0.25));
    }
}

TEST_CASE("K decreasing and convex on the real axis") {
    std::vector<FragmentationKernel> kernels = {FragmentationKernel::homogeneous(),
                                                FragmentationKernel::mitosis(),
                                                FragmentationKernel::power(1.0)};
    for (auto& k : kernels) {
        const double lo = std::isfinite(k.p1()) ? k.p1() + 0.1 : -5.0;
        double prev = k.K(lo);
        for (int i = 1; i <= 50; ++i) {
            const double s = lo + 0.2 * i;
            const double v = k.K(s);
            CHECK(v > 0.0);
            CHECK(v < prev);
            CHECK(k.d2K(s) > 0.0);
            prev = v;
        }
    }
}

TEST_CASE("density kernels: quadrature matches closed form") {
    // Tabulated flat density 2 on (0,1) reproduces the homogeneous kernel.
    std::vector<double> grid, vals;
    for (int i = 0; i <= 400; ++i) {
        grid.push_back(i / 400.0);
        vals.push_back(2.0);
    }
    auto tab = FragmentationKernel::tabulated(grid, vals);
    auto hom = FragmentationKernel::homogeneous();
    for (double s : {1.0, 2.0, 3.5}) {
        CHECK(tab.K(s) == doctest::Approx(hom.K(s)).epsilon(1e-9));
        CHECK(tab.dK(s) == doctest::Approx(hom.dK(s)).epsilon(1e-7));
    }
    // Oscillatory evaluation: compare against the closed form at Im s = 40.
    const Complex s(2.0, 40.0);
    const Complex closed = hom.mellin(s);
    const Complex numeric = tab.mellin(s);
    CHECK(std::abs(numeric - closed) / std::abs(closed) < 1e-6);
}

TEST_CASE("lower abscissa") {
    CHECK(lower_abscissa(FragmentationKernel::homogeneous()) == 0.0);
    CHECK(lower_abscissa(FragmentationKernel::mitosis()) == kNegInf);
    CHECK(lower_abscissa(FragmentationKernel::power(1.0)) ==
          doctest::Approx(-1.0));
    CHECK_THROWS_AS(FragmentationKernel::homogeneous().K(-0.5), DomainError);
}

TEST_CASE("admissibility report") {
    CHECK(check_admissible(FragmentationKernel::homogeneous()).pass);
    CHECK(check_admissible(FragmentationKernel::mitosis()).pass);
    CHECK(check_admissible(FragmentationKernel::power(2.0)).pass);
    // Dirac at 1 is rejected outright.
    CHECK_THROWS_AS(FragmentationKernel::atoms({{1.0, 1.0}}), DomainError);
    // k0 = 1: first moment 1/2, not a probability-normalized kernel.
    std::vector<double> zg, zv;
    for (int i = 0; i <= 120; ++i) {
        zg.push_back(std::pow(10.0, -3.0 + 3.0 * i / 120.0));
        zv.push_back(1.0);
    }
    auto flat1 = FragmentationKernel::tabulated(zg, zv);
    auto report = check_admissible(flat1);
    CHECK_FALSE(report.pass);
    CHECK(report.checks[0].measured == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("cumulative first moment") {
    auto hom = FragmentationKernel::homogeneous();
    CHECK(hom.cumulative_first_moment(0.5) == doctest::Approx(0.25));
    CHECK(hom.cumulative_first_moment(1.0) == doctest::Approx(1.0));
    auto mito = FragmentationKernel::mitosis();
    CHECK(mito.cumulative_first_moment(0.4) == 0.0);
    CHECK(mito.cumulative_first_moment(0.6) == doctest::Approx(1.0));
}

TEST_CASE("condition H examples") {
    auto single = condition_h({{0.5, 2.0}});
    CHECK(single.satisfied);
    CHECK(single.theta == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(single.exponents == std::vector<std::int64_t>{1});
    CHECK(single.v_star ==
          doctest::Approx(2.0 * M_PI / std::log(0.5)).epsilon(1e-10));
    CHECK(single.v_star < 0.0);

    auto halves = condition_h({{0.5, 1.0}, {0.25, 1.0}});
    CHECK(halves.satisfied);
    CHECK(halves.theta == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(halves.exponents == std::vector<std::int64_t>{1, 2});

    auto incomm = condition_h({{0.5, 1.0}, {1.0 / 3.0, 1.0}});
    CHECK_FALSE(incomm.satisfied);
    CHECK(incomm.certificate.find("0.5") != std::string::npos);

    auto theta07 = condition_h({{0.49, 2.5}, {0.343, 1.2}});
    CHECK(theta07.satisfied);
    CHECK(theta07.theta == doctest::Approx(0.7).epsilon(1e-9));
    CHECK(theta07.exponents == std::vector<std::int64_t>{2, 3});
}

TEST_CASE("condition H invariances") {
    std::vector<KernelAtom> atoms = {{0.49, 1.0}, {0.343, 2.0}};
    auto a = condition_h(atoms);
    std::swap(atoms[0], atoms[1]);
    auto b = condition_h(atoms);
    atoms.push_back({0.49, 5.0});  // duplicate location
    auto c = condition_h(atoms);
    for (const auto* r : {&b, &c}) {
        CHECK(r->satisfied == a.satisfied);
        CHECK(r->theta == doctest::Approx(a.theta).epsilon(1e-12));
        CHECK(r->exponents == a.exponents);
    }
}

TEST_CASE("condition H recovers programmatic powers of theta") {
    const double theta = 0.81;
    std::vector<std::int64_t> exps = {2, 3, 7};
    std::vector<KernelAtom> atoms;
    for (auto p : exps)
        atoms.push_back({std::pow(theta, static_cast<double>(p)), 1.0});
    auto res = condition_h(atoms);
    CHECK(res.satisfied);
    CHECK(res.theta == doctest::Approx(theta).epsilon(1e-9));
    CHECK(res.exponents == exps);
}

TEST_CASE("quadrature oracles") {
    QuadratureOptions opts;
    CHECK(integrate_real([](double x) { return x * x; }, 0.0, 1.0, opts) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    const Complex osc = integrate(
        [](double x) { return std::exp(Complex(0.0, 10.0) * x); }, 0.0, 1.0,
        opts);
    const Complex exact = (std::exp(Complex(0.0, 10.0)) - 1.0) / Complex(0.0, 10.0);
    CHECK(std::abs(osc - exact) < 1e-12);
    const Complex line =
        integrate_line([](double x) { return Complex(std::exp(-x * x), 0.0); });
    CHECK(line.real() == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));

    std::vector<double> nodes, weights;
    gauss_legendre(8, nodes, weights);
    double s4 = 0.0;
    for (int i = 0; i < 8; ++i) s4 += weights[i] * std::pow(nodes[i], 4);
    CHECK(s4 == doctest::Approx(0.4).epsilon(1e-13));

    // Gregory weights integrate a smooth function to 4th order.
    auto gregory_int = [](int n) {
        const double h = 1.0 / (n - 1);
        auto w = gregory_weights(n, h);
        double sum = 0.0;
        for (int i = 0; i < n; ++i) sum += w[i] * std::exp(i * h);
        return std::fabs(sum - (std::exp(1.0) - 1.0));
    };
    const double e1 = gregory_int(33), e2 = gregory_int(65);
    CHECK(e1 / e2 > 10.0);  // >= 4th order would give 16x
}

TEST_CASE("root-finder oracles") {
    auto f = [](double x) { return x * x - 2.0; };
    CHECK(bisect(f, 0.0, 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(newton_bisect(f, [](double x) { return 2.0 * x; }, 0.0, 2.0, 1.0) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(bisect(f, 2.0, 3.0), RootBracketError);
}

TEST_CASE("rational detection oracle") {
    auto fit = best_rational(2.0 / 7.0, 1000000, 1e-9);
    CHECK(fit.found);
    CHECK(fit.decisive);
    CHECK(fit.num == 2);
    CHECK(fit.den == 7);
    auto irr = best_rational(std::log(3.0) / std::log(2.0), 1000000, 1e-9);
    CHECK_FALSE(irr.decisive);
    CHECK(gcd64(12, 18) == 6);
    CHECK(lcm64(4, 6) == 12);
}
