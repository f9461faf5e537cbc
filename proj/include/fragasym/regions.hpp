#ifndef FRAGASYM_REGIONS_HPP
#define FRAGASYM_REGIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fragasym/datum.hpp"
#include "fragasym/kernel.hpp"

namespace fragasym {

// Exponential growth/decay bookkeeping for x u(t, x) along saddle rays
// x = e^{K'(s) t}. F's zeros p_bar < q_bar delimit the growth interval; the
// datum strip may cut it via the mixed exponents G(p0, .) and G(q0, .).
struct RegionReport {
    double p_bar = 0.0;  // in (p1, 1)
    double q_bar = 0.0;  // in (2, infinity)
    std::optional<double> s_bar_p0;
    std::optional<double> s_bar_q0;
    double s_left = 0.0;
    double s_right = 0.0;
    double slope_left = 0.0;   // K'(s_left)
    double slope_right = 0.0;  // K'(s_right)
};

// F(s) = K(s) - 1 - (s-1) K'(s).
double F_exponent(const FragmentationKernel& kernel, double s);

// G(p, s) = K(p) - 1 - (p-1) K'(s); G(s, s) = F(s).
double G_exponent(const FragmentationKernel& kernel, double p, double s);

RegionReport region_report(const FragmentationKernel& kernel,
                           const InitialDatum& datum);

enum class GrowthFragCase { ZoneToInfinity, Mixed, ZoneToZero };

std::string to_string(GrowthFragCase c);

struct GrowthFragClassification {
    GrowthFragCase kind = GrowthFragCase::Mixed;
    // Mixed case only: whether the maximal-growth ray x = e^{(K'(1)+c)t}
    // moves toward zero.
    bool max_ray_to_zero = false;
    double threshold_p_bar = 0.0;  // -K'(p_bar)
    double threshold_q_bar = 0.0;  // -K'(q_bar)
    double minus_dK_one = 0.0;     // -K'(1)
    std::vector<std::string> warnings;
};

GrowthFragClassification classify_growth_frag(const FragmentationKernel& kernel,
                                              const InitialDatum& datum,
                                              double c);

struct CriticalCurve {
    std::optional<double> c;  // largest slope, when a root exists
    std::optional<double> s;  // the corresponding saddle coordinate
    std::vector<std::pair<double, double>> all_roots;  // (s, c) pairs
};

// Solves -K'(s) s + K(s) = 0 over s > p1; each root s gives a ray
// -log(x) = c t with c = -K'(s) along which phi(s_plus, t, x) vanishes.
CriticalCurve critical_curve_slope(const FragmentationKernel& kernel);

}  // namespace fragasym

#endif
