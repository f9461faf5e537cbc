#ifndef FRAGASYM_INVERSION_HPP
#define FRAGASYM_INVERSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "fragasym/datum.hpp"
#include "fragasym/kernel.hpp"

namespace fragasym {

enum class ContourRule { Trapezoid, GaussPanels };

struct ContourConfig {
    double abscissa = 0.0;     // nu, must lie in (p0, q0)
    double half_height = 0.0;  // V, truncation of the vertical line
    int nodes = 64;            // >= 64
    ContourRule rule = ContourRule::Trapezoid;
};

struct InversionReport {
    double value = 0.0;
    double imag_residue = 0.0;  // |Im| of the raw contour integral
    double abscissa = 0.0;
    double half_height = 0.0;
    int nodes = 0;
    std::vector<std::string> warnings;
};

// Evaluates u(t, x) = (1/2pi) \int U0(nu + iv) e^{(K(nu+iv)-1)t} x^{-nu-iv} dv.
// Without a config, nu is the saddle abscissa clamped into the strip, V is
// grown until the integrand magnitude at +-V is below 1e-14 of its central
// value, and trapezoid nodes are doubled until successive results agree to
// 1e-9 relative.
InversionReport inverse_mellin_u_report(const InitialDatum& datum,
                                        const FragmentationKernel& kernel,
                                        double t, double x,
                                        std::optional<ContourConfig> config = {});

double inverse_mellin_u(const InitialDatum& datum,
                        const FragmentationKernel& kernel, double t, double x,
                        std::optional<ContourConfig> config = {});

}  // namespace fragasym

#endif
