// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is independent; failures do not stop the run.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fragasym/asymptotics.hpp"
#include "fragasym/datum.hpp"
#include "fragasym/inversion.hpp"
#include "fragasym/kernel.hpp"
#include "fragasym/regions.hpp"
#include "fragasym/simulator.hpp"

using namespace fragasym;

namespace {

int g_failures = 0;

void report(int id, bool pass, const std::string& what,
            const std::string& detail) {
    std::printf("criterion %2d: %s — %s (%s)\n", id, pass ? "PASS" : "FAIL",
                what.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

const double kLog2 = std::log(2.0);

// ---- 1: kernel identities --------------------------------------------------

void criterion1() {
    bool pass = true;
    double worst_k2 = 0.0;
    for (const auto& k :
         {FragmentationKernel::homogeneous(), FragmentationKernel::mitosis(),
          FragmentationKernel::power(1.0)}) {
        worst_k2 = std::max(worst_k2, std::fabs(k.K(2.0) - 1.0));
        pass = pass && std::fabs(k.K(2.0) - 1.0) <= 1e-12 && k.K(1.0) > 1.0;
        const double lo = std::isfinite(k.p1()) ? k.p1() + 0.1 : -5.0;
        double prev = k.K(lo);
        for (int i = 1; i <= 50; ++i) {
            const double s = lo + 0.2 * i;
            const double v = k.K(s);
            pass = pass && v < prev && k.d2K(s) > 0.0;
            prev = v;
        }
    }
    report(1, pass, "kernel identities K(2)=1, K(1)>1, decreasing, convex",
           fmt("max |K(2)-1| = %.2e", worst_k2));
}

// ---- 2: region zeros ---------------------------------------------------------

void criterion2() {
    auto lg = InitialDatum::log_gaussian(-5.0);
    auto hom = region_report(FragmentationKernel::homogeneous(), lg);
    auto mito = region_report(FragmentationKernel::mitosis(), lg);
    const double ep = std::fabs(hom.p_bar - (2.0 - std::sqrt(2.0)));
    const double eq = std::fabs(hom.q_bar - (2.0 + std::sqrt(2.0)));
    const bool pass =
        ep <= 1e-10 && eq <= 1e-10 && mito.p_bar < 0.0 && mito.q_bar > 3.0;
    report(2, pass, "region zeros: homogeneous 2∓√2, mitosis p̄<0 q̄>3",
           fmt("errors %.1e/%.1e, mitosis %.4f/%.4f", ep, eq, mito.p_bar,
               mito.q_bar));
}

// ---- 3: closed-form saddles ---------------------------------------------------

void criterion3() {
    auto hom = FragmentationKernel::homogeneous();
    auto mito = FragmentationKernel::mitosis();
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double t = 0.5 + 19.5 * i / 19.0;
            const double x = 0.01 + 0.98 * j / 19.0;
            const double sh = saddle_point(hom, t, x).s_plus;
            worst = std::max(worst,
                             std::fabs(sh - std::sqrt(2.0 * t / -std::log(x))));
            const double sm = saddle_point(mito, t, x).s_plus;
            const double closed = 2.0 - std::log2(-std::log(x) / (t * kLog2));
            worst = std::max(worst, std::fabs(sm - closed));
        }
    }
    report(3, worst <= 1e-10, "closed-form saddles on a 20x20 (t,x) grid",
           fmt("max deviation %.2e", worst));
}

// ---- 4: self-similar residual order -------------------------------------------

// One RK4 step of dn/dt = -n + Frag(n) from the exact power-law field,
// compared against the exact one-step factor e^{(K(sigma)-1) dt}.
double one_step_error(const FragmentationKernel& kernel, double dy, double dt,
                      double sigma) {
    const double y_min = -10.0, y_max = 40.0;
    const std::size_t n = static_cast<std::size_t>((y_max - y_min) / dy) + 1;
    std::vector<double> field(n);
    for (std::size_t i = 0; i < n; ++i)
        field[i] = std::exp(-sigma * (y_min + dy * i));
    FragOperator op(kernel, dy, n);
    auto rhs = [&](const std::vector<double>& v, std::vector<double>& out) {
        op.apply(v, out);
        for (std::size_t i = 0; i < n; ++i) out[i] -= v[i];
    };
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    rhs(field, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = field[i] + 0.5 * dt * k1[i];
    rhs(tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = field[i] + 0.5 * dt * k2[i];
    rhs(tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = field[i] + dt * k3[i];
    rhs(tmp, k4);
    const std::size_t probe = static_cast<std::size_t>(12.0 / dy);
    const double stepped =
        field[probe] +
        dt / 6.0 * (k1[probe] + 2.0 * k2[probe] + 2.0 * k3[probe] + k4[probe]);
    const double exact =
        field[probe] * std::exp((kernel.K(sigma) - 1.0) * dt);
    // residual per unit time, relative to the field scale
    return std::fabs(stepped - exact) / (dt * field[probe]);
}

void criterion4() {
    bool pass = true;
    std::string detail;
    for (const auto& k :
         {FragmentationKernel::homogeneous(), FragmentationKernel::mitosis()}) {
        // dy chosen so log 2 is never a grid multiple: the mitosis shift then
        // exercises the cubic stencil instead of collapsing to an exact copy
        // (whose residual is roundoff and has no measurable order).
        std::vector<double> errs;
        for (int level = 0; level < 4; ++level) {
            const double dy = 0.09 / (1 << level);
            errs.push_back(one_step_error(k, dy, dy / 4.0, 2.3));
        }
        // least-squares slope of log2(err) against level
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int i = 0; i < 4; ++i) {
            sx += i;
            sy += std::log2(errs[i]);
            sxx += i * i;
            sxy += i * std::log2(errs[i]);
        }
        const double order = -(4.0 * sxy - sx * sy) / (4.0 * sxx - sx * sx);
        pass = pass && order >= 3.5;
        detail += fmt("%s order %.2f ", to_string(k.form()).c_str(), order);
    }
    report(4, pass, "self-similar residual order >= 3.5 over refinements",
           detail);
}

// ---- 5: mass conservation -------------------------------------------------------

void criterion5() {
    auto sol = simulate_log_grid(FragmentationKernel::mitosis(),
                                 InitialDatum::log_gaussian(-5.0), -60.0, 5.0,
                                 kLog2 / 16.0, kLog2 / 64.0, 20.0);
    const double m0 = sol.mass_series.front().mass;
    double worst_dev = 0.0, worst_leak = 0.0;
    for (const auto& m : sol.mass_series) {
        worst_dev = std::max(worst_dev, std::fabs(m.mass - m0) / m0);
        worst_leak = std::max(worst_leak, m.leak);
    }
    report(5, worst_dev <= 1e-4 && worst_leak <= 1e-6,
           "mass conservation to t=20 on the default mitosis grid",
           fmt("max |dM|/M = %.2e, max leak = %.2e", worst_dev, worst_leak));
}

// ---- 6: three-way solver agreement ----------------------------------------------

void criterion6() {
    auto hom = FragmentationKernel::homogeneous();
    auto lg = InitialDatum::log_gaussian(-5.0);
    const double dy = kLog2 / 16.0;

    bool pass = true;
    double worst = 0.0;
    for (double t : {0.5, 1.0}) {
        // simulate to exactly t so the final snapshot needs no time
        // interpolation against the other two solvers
        auto sol = simulate_log_grid(hom, lg, -30.0, 5.0, dy, dy / 4.0, t);
        const std::size_t n = sol.n_points();
        std::vector<double> xs(n);
        for (std::size_t i = 0; i < n; ++i) xs[i] = std::exp(sol.y_at(i));
        auto picard = picard_solve(hom, lg, t, xs);
        const std::size_t snap = sol.snapshots.size() - 1;
        double max_u = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            max_u = std::max(max_u, sol.snapshots[snap].values[i]);
        for (std::size_t i = 0; i < n; i += 8) {
            const double g = sol.snapshots[snap].values[i];
            if (g < 1e-8 * max_u) continue;
            const double p = picard[i];
            const double m = inverse_mellin_u(lg, hom, t, xs[i]);
            const double scale = std::max({g, p, m});
            const double dev = std::max({std::fabs(g - p), std::fabs(g - m),
                                         std::fabs(p - m)}) /
                               scale;
            worst = std::max(worst, dev);
            pass = pass && dev <= 1e-3;
        }
    }
    report(6, pass, "grid/picard/mellin pairwise agreement at t=0.5, 1",
           fmt("worst pairwise deviation %.2e", worst));
}

// ---- 7: theorem 3(a) convergence trend --------------------------------------------

void criterion7() {
    auto hom = FragmentationKernel::homogeneous();
    auto lg = InitialDatum::log_gaussian(-5.0);
    std::vector<double> devs;
    for (double t : {25.0, 50.0, 100.0}) {
        const double x = std::exp(hom.dK(2.0) * t);  // saddle pinned at 2
        const double u = inverse_mellin_u(lg, hom, t, x);
        const double a = leading_term(lg, hom, t, x).value;
        devs.push_back(std::fabs(u / a - 1.0));
    }
    const bool pass =
        devs[0] > devs[1] && devs[1] > devs[2] && devs[2] < 0.10;
    report(7, pass, "T3(a) relative error shrinks along s+=2, <0.10 at t=100",
           fmt("%.4f -> %.4f -> %.4f", devs[0], devs[1], devs[2]));
}

// ---- 8: theorem 1 exponential error decay -----------------------------------------

void criterion8() {
    // The two-sided power datum's upper tail is exact, so the analytic T1
    // error vanishes; what decays at the Theorem-1 rate is the inversion's
    // contour-truncation error. A fixed contour exposes it cleanly.
    auto hom = FragmentationKernel::homogeneous();
    auto tsp = InitialDatum::two_sided_power(0.0, 3.0);
    ContourConfig cfg{1.5, 200.0, 1 << 17, ContourRule::Trapezoid};
    std::vector<double> logs;
    for (double t : {5.0, 10.0, 15.0}) {
        const double u = inverse_mellin_u(tsp, hom, t, 2.0, cfg);
        const double t1 = leading_term(tsp, hom, t, 2.0).value;
        logs.push_back(std::log(std::fabs(u / t1 - 1.0)));
    }
    const double d1 = logs[1] - logs[0], d2 = logs[2] - logs[1];
    const bool pass =
        d1 < 0.0 && d2 < 0.0 && std::fabs(d2 - d1) <= 0.2 * std::fabs(d1);
    report(8, pass, "log|u/T1-1| at x=2 decays affinely over t=5,10,15",
           fmt("increments %.3f, %.3f", d1, d2));
}

// ---- 9: condition-H detection ------------------------------------------------------

void criterion9() {
    auto a = condition_h({{0.5, 1.0}});
    auto b = condition_h({{0.5, 1.0}, {0.25, 1.0}});
    auto c = condition_h({{0.5, 1.0}, {1.0 / 3.0, 1.0}});
    auto d = condition_h({{0.49, 1.0}, {0.343, 1.0}});
    const bool pass =
        a.satisfied && std::fabs(a.theta - 0.5) < 1e-12 &&
        b.satisfied && std::fabs(b.theta - 0.5) < 1e-12 &&
        b.exponents == std::vector<std::int64_t>{1, 2} && !c.satisfied &&
        d.satisfied && std::fabs(d.theta - 0.7) < 1e-9 &&
        d.exponents == std::vector<std::int64_t>{2, 3};
    report(9, pass, "condition-H yes/yes/no/yes with expected witnesses",
           fmt("thetas %.3f %.3f - %.3f", a.theta, b.theta, d.theta));
}

// ---- 10: Poisson/Fourier duality ----------------------------------------------------

void criterion10() {
    auto mito = FragmentationKernel::mitosis();
    auto lg = InitialDatum::log_gaussian(-5.0);
    const double t = 30.0;
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double s_target = 1.1 + 1.8 * i / 9.0;  // s+ in (1, 3)
        const double x = std::exp(mito.dK(s_target) * t);
        const double series = theorem3b_auto(lg, mito, t, x).value;
        const double dual = poisson_approx(lg, 0.5, mito, t, x);
        worst = std::max(worst, std::fabs(series / dual - 1.0));
    }
    report(10, worst <= 1e-6, "theorem3b_series matches poisson_approx",
           fmt("worst relative gap %.2e over 10 x-points", worst));
}

// ---- 11: corollary profiles ----------------------------------------------------------

void criterion11() {
    auto mito = FragmentationKernel::mitosis();
    // The criterion pins the kernel, t, and the log-Gaussian family; the
    // center/width are free. y0 = -1, w = 1/2 keeps the finite-t corrections
    // |y0 + 2 w^2|/t and w^2/(t K''(2)) inside the tolerances.
    auto lg = InitialDatum::log_gaussian(-1.0, 0.5);
    auto sol = simulate_log_grid(mito, lg, -60.0, 5.0, kLog2 / 16.0,
                                 kLog2 / 64.0, 20.0);
    auto evaluator = [&](double t, double x) {
        return sol.evaluate(sol.snapshot_near(t), x);
    };
    auto prof = rescaled_profiles(lg, mito, evaluator, 20.0);
    const double mean_dev = std::fabs(prof.r.mean - mito.dK(2.0));
    const double var_dev = std::fabs(prof.r_tilde.variance - 1.0);
    report(11, mean_dev <= 0.05 && var_dev <= 0.10,
           "profiles at t=20: mean(r)->K'(2), var(r~)->1",
           fmt("|mean - K'(2)| = %.4f, |var - 1| = %.4f", mean_dev, var_dev));
}

// ---- 12: mitosis support-boundary figure ----------------------------------------------

void criterion12() {
    auto mito = FragmentationKernel::mitosis();
    auto lg = InitialDatum::log_gaussian(-5.0);
    auto sol = simulate_log_grid(mito, lg, -380.0, 5.0, kLog2 / 16.0,
                                 kLog2 / 64.0, 100.0);
    auto region = region_report(mito, lg);

    std::vector<double> ts, y_lo, y_hi;
    for (const auto& snap : sol.snapshots) {
        if (snap.t < 50.0 || snap.t > 100.0) continue;
        const double peak = *std::max_element(snap.values.begin(),
                                              snap.values.end());
        const double thresh = 0.1 * peak;
        std::size_t lo = 0, hi = snap.values.size() - 1;
        while (lo < snap.values.size() && snap.values[lo] < thresh) ++lo;
        while (hi > 0 && snap.values[hi] < thresh) --hi;
        ts.push_back(snap.t);
        y_lo.push_back(sol.y_at(lo));
        y_hi.push_back(sol.y_at(hi));
    }

    auto fit = [&](const std::vector<double>& ys, double& slope, double& r2) {
        const double n = static_cast<double>(ts.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
        for (std::size_t i = 0; i < ts.size(); ++i) {
            sx += ts[i];
            sy += ys[i];
            sxx += ts[i] * ts[i];
            sxy += ts[i] * ys[i];
            syy += ys[i] * ys[i];
        }
        slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        const double corr =
            (n * sxy - sx * sy) /
            std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
        r2 = corr * corr;
    };
    double slope_lo, r2_lo, slope_hi, r2_hi;
    fit(y_lo, slope_lo, r2_lo);
    fit(y_hi, slope_hi, r2_hi);

    const bool inside_lo =
        slope_lo >= region.slope_left && slope_lo <= region.slope_right;
    const bool inside_hi =
        slope_hi >= region.slope_left && slope_hi <= region.slope_right;
    const bool pass =
        r2_lo >= 0.99 && r2_hi >= 0.99 && inside_lo && inside_hi;
    report(12, pass, "10%-support boundaries: linear fits inside [K'(sl),K'(sr)]",
           fmt("slopes %.4f/%.4f in [%.4f, %.4f], R2 %.5f/%.5f", slope_lo,
               slope_hi, region.slope_left, region.slope_right, r2_lo, r2_hi));
}

// ---- 13: critical curve -----------------------------------------------------------------

void criterion13() {
    auto mito = FragmentationKernel::mitosis();
    auto curve = critical_curve_slope(mito);
    bool pass = curve.c.has_value();
    double c_err = 1e300, worst_phi = 1e300;
    if (pass) {
        c_err = std::fabs(*curve.c - 4.0 * M_E * kLog2);
        pass = c_err <= 1e-8;
        worst_phi = 0.0;
        for (double t : {1.0, 3.0, 7.0, 15.0, 30.0}) {
            const double x = std::exp(-*curve.c * t);
            worst_phi = std::max(
                worst_phi, std::fabs(saddle_point(mito, t, x).phi_at_saddle));
        }
        pass = pass && worst_phi <= 1e-8;
    }
    report(13, pass, "mitosis critical curve c = 4e log 2 with phi = 0 on it",
           fmt("|c - 4e log2| = %.2e, max |phi| = %.2e", c_err, worst_phi));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    criterion13();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 13 criteria passed\n");
    return 0;
}
