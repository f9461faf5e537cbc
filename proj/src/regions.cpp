#include "fragasym/regions.hpp"

#include <cmath>
#include <functional>

#include "fragasym/errors.hpp"
#include "fragasym/roots.hpp"

namespace fragasym {

namespace {
// Left bracket end for F's lower zero: F -> -infinity toward p1 (or toward
// -infinity for purely atomic kernels) at an unknown distance.
double grow_left_until_negative(const FragmentationKernel& kernel) {
    const double p1 = kernel.p1();
    if (std::isfinite(p1)) {
        double offset = 0.5;
        for (int i = 0; i < 120; ++i) {
            if (F_exponent(kernel, p1 + offset) < 0.0) return p1 + offset;
            offset *= 0.5;
        }
        throw RootBracketError("region_report: F has no sign change above p1");
    }
    double a = -1.0;
    for (int i = 0; i < 200; ++i) {
        if (F_exponent(kernel, a) < 0.0) return a;
        a = 2.0 * a - 1.0;
    }
    throw RootBracketError("region_report: F stays positive toward -infinity");
}

double grow_right_until(const std::function<double(double)>& f, double start,
                        bool want_negative) {
    double b = start;
    for (int i = 0; i < 200; ++i) {
        const double v = f(b);
        if (want_negative ? v < 0.0 : v > 0.0) return b;
        b = 2.0 * b + 1.0;
    }
    throw RootBracketError("region_report: no sign change within grown bracket");
}
}  // namespace

double F_exponent(const FragmentationKernel& kernel, double s) {
    return kernel.K(s) - 1.0 - (s - 1.0) * kernel.dK(s);
}

double G_exponent(const FragmentationKernel& kernel, double p, double s) {
    return kernel.K(p) - 1.0 - (p - 1.0) * kernel.dK(s);
}

std::string to_string(GrowthFragCase c) {
    switch (c) {
        case GrowthFragCase::ZoneToInfinity: return "zone_to_infinity";
        case GrowthFragCase::Mixed: return "mixed";
        case GrowthFragCase::ZoneToZero: return "zone_to_zero";
    }
    return "?";
}

RegionReport region_report(const FragmentationKernel& kernel,
                           const InitialDatum& datum) {
    RegionReport rep;
    auto F = [&kernel](double s) { return F_exponent(kernel, s); };
    RootOptions opts;
    opts.x_tol = 1e-13;

    // F(1) = K(1) - 1 > 0 and F(2) = -K'(2) > 0 bound the two zeros.
    rep.p_bar = bisect(F, grow_left_until_negative(kernel), 1.0, opts);
    rep.q_bar = bisect(F, 2.0, grow_right_until(F, 4.0, true), opts);

    const double p0 = datum.p0(), q0 = datum.q0();
    if (std::isfinite(p0) && p0 > rep.p_bar) {
        // G(p0, .) increases from -infinity to K(p0) - 1 > 0.
        auto G = [&kernel, p0](double s) { return G_exponent(kernel, p0, s); };
        // G and F share the divergence toward p1; push left until G < 0.
        double left = grow_left_until_negative(kernel);
        const double p1 = kernel.p1();
        for (int i = 0; i < 120 && G(left) >= 0.0; ++i)
            left = std::isfinite(p1) ? p1 + 0.5 * (left - p1) : 2.0 * left - 1.0;
        const double right = grow_right_until(G, std::max(left + 1.0, 2.0), false);
        rep.s_bar_p0 = bisect(G, left, right, opts);
        rep.s_left = *rep.s_bar_p0;
    } else {
        rep.s_left = rep.p_bar;
    }

    if (std::isfinite(q0) && q0 < rep.q_bar) {
        // G(q0, .) decreases from +infinity to K(q0) - 1 < 0.
        auto G = [&kernel, q0](double s) { return G_exponent(kernel, q0, s); };
        double left = grow_left_until_negative(kernel);  // G > 0 near p1
        for (int i = 0; i < 120 && G(left) <= 0.0; ++i) {
            const double p1 = kernel.p1();
            left = std::isfinite(p1) ? p1 + 0.5 * (left - p1) : 2.0 * left - 1.0;
        }
        const double right = grow_right_until(
            [&G](double s) { return -G(s); }, std::max(left + 1.0, 2.0), false);
        rep.s_bar_q0 = bisect(G, left, right, opts);
        rep.s_right = *rep.s_bar_q0;
    } else {
        rep.s_right = rep.q_bar;
    }

    rep.slope_left = kernel.dK(rep.s_left);
    rep.slope_right = kernel.dK(rep.s_right);
    return rep;
}

GrowthFragClassification classify_growth_frag(const FragmentationKernel& kernel,
                                              const InitialDatum& datum,
                                              double c) {
    if (!(c > 0.0)) throw DomainError("classify_growth_frag: requires c > 0");
    RegionReport rep = region_report(kernel, datum);
    GrowthFragClassification out;
    out.threshold_p_bar = -kernel.dK(rep.p_bar);
    out.threshold_q_bar = -kernel.dK(rep.q_bar);
    out.minus_dK_one = -kernel.dK(1.0);
    if (c > out.threshold_p_bar) {
        out.kind = GrowthFragCase::ZoneToInfinity;
    } else if (c < out.threshold_q_bar) {
        out.kind = GrowthFragCase::ZoneToZero;
    } else {
        out.kind = GrowthFragCase::Mixed;
        out.max_ray_to_zero = c + kernel.dK(1.0) < 0.0;
    }
    if (std::isfinite(datum.p0()) || std::isfinite(datum.q0()))
        out.warnings.push_back(
            "datum has power tails: the growth-fragmentation classification is "
            "established for data with an entire Mellin transform");
    return out;
}

CriticalCurve critical_curve_slope(const FragmentationKernel& kernel) {
    CriticalCurve out;
    auto psi = [&kernel](double s) {
        return -kernel.dK(s) * s + kernel.K(s);
    };

    // Sample s geometrically from just above p1 up to large s and bisect
    // every sign change; multiple or no roots are possible.
    std::vector<double> samples;
    const double p1 = kernel.p1();
    const int n = 400;
    if (std::isfinite(p1)) {
        for (int i = 0; i <= n; ++i)
            samples.push_back(p1 + std::pow(10.0, -6.0 + 10.0 * i / n));
    } else {
        for (int i = n; i >= 0; --i)
            samples.push_back(-std::pow(10.0, -5.0 + 9.0 * i / n));
        for (int i = 0; i <= n; ++i)
            samples.push_back(std::pow(10.0, -5.0 + 9.0 * i / n));
    }

    RootOptions opts;
    opts.x_tol = 1e-14;
    double prev_s = samples.front();
    double prev_v = psi(prev_s);
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const double s = samples[i];
        const double v = psi(s);
        if (std::isfinite(prev_v) && std::isfinite(v) && prev_v * v < 0.0) {
            const double root = bisect(psi, prev_s, s, opts);
            out.all_roots.emplace_back(root, -kernel.dK(root));
        }
        prev_s = s;
        prev_v = v;
    }
    for (const auto& [s, c] : out.all_roots) {
        if (!out.c || c > *out.c) {
            out.c = c;
            out.s = s;
        }
    }
    return out;
}

}  // namespace fragasym
