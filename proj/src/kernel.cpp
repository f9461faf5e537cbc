#include "fragasym/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fragasym/errors.hpp"
#include "fragasym/quadrature.hpp"
#include "fragasym/rational.hpp"

namespace fragasym {

namespace {
const double kPi = std::acos(-1.0);

double fit_tabulated_p1(const PiecewiseLinearDensity& d) {
    // Power-law fit on the smallest decade of positive-value nodes.
    std::vector<double> lx, ly;
    double z0 = 0.0;
    for (std::size_t i = 0; i < d.grid.size(); ++i) {
        if (d.grid[i] > 0.0 && d.values[i] > 0.0) {
            if (z0 == 0.0) z0 = d.grid[i];
            if (d.grid[i] <= 10.0 * z0 || lx.size() < 4) {
                lx.push_back(std::log(d.grid[i]));
                ly.push_back(std::log(d.values[i]));
            }
        }
    }
    if (lx.size() < 3)
        throw EstimationError("tabulated density: too few small-z nodes to estimate p1");
    const std::size_t n = lx.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-14)
        throw EstimationError("tabulated density: degenerate small-z grid");
    const double slope = (n * sxy - sx * sy) / denom;
    // Conservative (larger) abscissa: fitted exponent plus a safety margin.
    return -slope + 0.1;
}
}  // namespace

std::string to_string(KernelForm f) {
    switch (f) {
        case KernelForm::Homogeneous: return "homogeneous";
        case KernelForm::Power: return "power";
        case KernelForm::Mitosis: return "mitosis";
        case KernelForm::Atoms: return "atoms";
        case KernelForm::Tabulated: return "tabulated";
        case KernelForm::Mixture: return "mixture";
    }
    return "?";
}

double PiecewiseLinearDensity::at(double z) const {
    if (grid.empty() || z < grid.front() || z > grid.back()) return 0.0;
    auto it = std::upper_bound(grid.begin(), grid.end(), z);
    if (it == grid.begin()) return values.front();
    if (it == grid.end()) return values.back();
    const std::size_t i = static_cast<std::size_t>(it - grid.begin());
    const double t = (z - grid[i - 1]) / (grid[i] - grid[i - 1]);
    return values[i - 1] * (1.0 - t) + values[i] * t;
}

FragmentationKernel FragmentationKernel::homogeneous() {
    FragmentationKernel k;
    k.form_ = KernelForm::Homogeneous;
    k.power_a_ = 0.0;
    k.p1_ = 0.0;
    k.norm_tolerance_ = 1e-10;
    return k;
}

FragmentationKernel FragmentationKernel::power(double a) {
    if (!(a > -1.0)) throw DomainError("power kernel requires a > -1");
    FragmentationKernel k;
    k.form_ = KernelForm::Power;
    k.power_a_ = a;
    k.p1_ = -a;
    k.norm_tolerance_ = 1e-10;
    return k;
}

FragmentationKernel FragmentationKernel::mitosis() {
    FragmentationKernel k;
    k.form_ = KernelForm::Mitosis;
    k.atoms_ = {{0.5, 2.0}};
    k.p1_ = kNegInf;
    k.norm_tolerance_ = 1e-10;
    return k;
}

FragmentationKernel FragmentationKernel::atoms(std::vector<KernelAtom> atoms) {
    if (atoms.empty()) throw DomainError("atom kernel requires at least one atom");
    for (const auto& a : atoms)
        if (!(a.sigma > 0.0 && a.sigma < 1.0))
            throw DomainError("atom location must lie strictly inside (0, 1)");
    FragmentationKernel k;
    k.form_ = KernelForm::Atoms;
    k.atoms_ = std::move(atoms);
    k.p1_ = kNegInf;
    k.norm_tolerance_ = 1e-10;
    return k;
}

FragmentationKernel FragmentationKernel::tabulated(std::vector<double> grid,
                                                   std::vector<double> values,
                                                   double norm_tolerance) {
    if (grid.size() != values.size() || grid.size() < 2)
        throw DomainError("tabulated kernel: grid/value size mismatch");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw DomainError("tabulated kernel: grid must be increasing");
    if (grid.front() < 0.0 || grid.back() > 1.0)
        throw DomainError("tabulated kernel: grid must lie in [0, 1]");
    for (double v : values)
        if (v < 0.0) throw DomainError("tabulated kernel: negative density value");
    FragmentationKernel k;
    k.form_ = KernelForm::Tabulated;
    k.density_.grid = std::move(grid);
    k.density_.values = std::move(values);
    k.norm_tolerance_ = norm_tolerance;
    k.p1_ = fit_tabulated_p1(k.density_);
    return k;
}

FragmentationKernel FragmentationKernel::mixture(PiecewiseLinearDensity density,
                                                 std::vector<KernelAtom> atoms,
                                                 double norm_tolerance) {
    for (const auto& a : atoms)
        if (!(a.sigma > 0.0 && a.sigma < 1.0))
            throw DomainError("atom location must lie strictly inside (0, 1)");
    FragmentationKernel k;
    k.form_ = KernelForm::Mixture;
    k.density_ = std::move(density);
    k.atoms_ = std::move(atoms);
    k.norm_tolerance_ = norm_tolerance;
    k.p1_ = k.density_.empty() ? kNegInf : fit_tabulated_p1(k.density_);
    return k;
}

void FragmentationKernel::check_domain(const Complex& s) const {
    if (!(s.real() > p1_))
        throw DomainError("Mellin transform requires Re(s) > p1 = " + std::to_string(p1_));
}

Complex FragmentationKernel::density_mellin(Complex s, int log_order) const {
    // Integrate in w = log z, where z^{s-1} dz = e^{s w} dw and log z = w.
    const double w_hi = std::log(density_.grid.back());
    double w_lo;
    if (density_.grid.front() > 0.0) {
        w_lo = std::log(density_.grid.front());
    } else {
        const double margin = std::max(s.real() - p1_, 1e-3);
        w_lo = std::min(-1.0, -50.0 / margin);
    }
    QuadratureOptions opts;
    opts.rel_tol = 1e-12;
    // Oscillation-aware panel count: z^{i Im(s)} completes |Im s| * range / 2pi
    // periods over the window.
    const double periods = std::abs(s.imag()) * (w_hi - w_lo) / (2.0 * kPi);
    opts.min_panels = std::max(1, static_cast<int>(std::ceil(1.5 * periods)) + 1);
    opts.max_subdivisions = std::max(20000, 4 * opts.min_panels);
    const auto& dens = density_;
    return integrate(
        [&dens, s, log_order](double w) {
            const double z = std::exp(w);
            Complex val = dens.at(z) * std::exp(s * w);
            for (int i = 0; i < log_order; ++i) val *= w;
            return val;
        },
        w_lo, w_hi, opts);
}

Complex FragmentationKernel::mellin(Complex s) const {
    check_domain(s);
    switch (form_) {
        case KernelForm::Homogeneous:
            return 2.0 / s;
        case KernelForm::Power:
            return (power_a_ + 2.0) / (s + power_a_);
        case KernelForm::Mitosis:
            return std::exp((2.0 - s) * std::log(2.0));
        default:
            break;
    }
    Complex total(0.0, 0.0);
    for (const auto& a : atoms_) total += a.weight * std::pow(Complex(a.sigma, 0.0), s - 1.0);
    if (!density_.empty()) total += density_mellin(s, 0);
    return total;
}

Complex FragmentationKernel::mellin_derivative(Complex s, int order) const {
    if (order < 1 || order > 3)
        throw DomainError("mellin_derivative: order must be in {1, 2, 3}");
    check_domain(s);
    switch (form_) {
        case KernelForm::Homogeneous:
        case KernelForm::Power: {
            const double a = power_a_;
            const double fact = (order == 1) ? 1.0 : (order == 2 ? 2.0 : 6.0);
            const double sign = (order % 2 == 0) ? 1.0 : -1.0;
            return sign * fact * (a + 2.0) / std::pow(s + a, order + 1);
        }
        case KernelForm::Mitosis: {
            const double l = -std::log(2.0);
            return std::pow(l, order) * std::exp((2.0 - s) * std::log(2.0));
        }
        default:
            break;
    }
    Complex total(0.0, 0.0);
    for (const auto& a : atoms_) {
        const double lg = std::log(a.sigma);
        total += a.weight * std::pow(lg, order) * std::pow(Complex(a.sigma, 0.0), s - 1.0);
    }
    if (!density_.empty()) total += density_mellin(s, order);
    return total;
}

double FragmentationKernel::cumulative_first_moment(double x) const {
    if (x <= 0.0) return 0.0;
    if (x > 1.0) x = 1.0;
    switch (form_) {
        case KernelForm::Homogeneous:
            return x * x;
        case KernelForm::Power:
            return std::pow(x, power_a_ + 2.0);
        default:
            break;
    }
    double total = 0.0;
    for (const auto& a : atoms_)
        if (a.sigma <= x) total += a.weight * a.sigma;
    if (!density_.empty()) {
        const auto& dens = density_;
        total += integrate_real([&dens](double z) { return z * dens.at(z); }, 0.0, x,
                                {1e-12, 1e-15, 4000, 8});
    }
    return total;
}

double FragmentationKernel::moment(int m) const {
    switch (form_) {
        case KernelForm::Homogeneous:
            return m == 0 ? 2.0 : 1.0;
        case KernelForm::Power:
            return m == 0 ? (power_a_ + 2.0) / (power_a_ + 1.0) : 1.0;
        default:
            break;
    }
    double total = 0.0;
    for (const auto& a : atoms_) total += a.weight * std::pow(a.sigma, m);
    if (!density_.empty()) {
        const auto& dens = density_;
        total += integrate_real(
            [&dens, m](double z) { return std::pow(z, m) * dens.at(z); },
            density_.grid.front(), density_.grid.back(), {1e-12, 1e-15, 4000, 8});
    }
    return total;
}

AdmissibilityReport check_admissible(const FragmentationKernel& kernel) {
    AdmissibilityReport report;
    const double tol = kernel.norm_tolerance();

    const double m1 = kernel.moment(1);
    report.checks.push_back(
        {"first_moment_is_one", m1, 1.0, std::abs(m1 - 1.0) <= tol});

    const double m0 = kernel.moment(0);
    report.checks.push_back({"total_mass_above_one", m0, 1.0, m0 > 1.0 + tol});

    bool atoms_ok = true;
    for (const auto& a : kernel.atom_list())
        if (!(a.sigma > 0.0 && a.sigma < 1.0)) atoms_ok = false;
    report.checks.push_back(
        {"atoms_strictly_inside_unit_interval", atoms_ok ? 1.0 : 0.0, 1.0, atoms_ok});

    double k2 = std::nan(""), k1 = std::nan("");
    try {
        k2 = kernel.K(2.0);
        k1 = kernel.K(1.0);
    } catch (const std::exception&) {
    }
    report.checks.push_back({"K_at_two_is_one", k2, 1.0, std::abs(k2 - 1.0) <= tol});
    report.checks.push_back({"K_at_one_above_one", k1, 1.0, k1 > 1.0 + tol});

    report.pass = true;
    for (const auto& c : report.checks) report.pass = report.pass && c.pass;
    return report;
}

double lower_abscissa(const FragmentationKernel& kernel) { return kernel.p1(); }

ConditionHResult condition_h(const std::vector<KernelAtom>& atoms,
                             std::int64_t max_denominator, double tolerance) {
    if (atoms.empty()) throw DomainError("condition_h: empty atom list");
    for (const auto& a : atoms)
        if (!(a.sigma > 0.0 && a.sigma < 1.0))
            throw DomainError("condition_h: atom location outside (0, 1)");

    // Deduplicate locations; sort by decreasing sigma (increasing |log sigma|).
    std::vector<double> sigmas;
    for (const auto& a : atoms) sigmas.push_back(a.sigma);
    std::sort(sigmas.begin(), sigmas.end(), std::greater<double>());
    sigmas.erase(std::unique(sigmas.begin(), sigmas.end(),
                             [](double x, double y) { return std::abs(x - y) < 1e-13; }),
                 sigmas.end());

    ConditionHResult result;
    const double base_log = std::log(sigmas.front());

    // Ratios log sigma_l / log sigma_0 must all be rational.
    std::vector<std::int64_t> nums(sigmas.size()), dens(sigmas.size());
    std::int64_t lcm_den = 1;
    for (std::size_t l = 0; l < sigmas.size(); ++l) {
        const double ratio = std::log(sigmas[l]) / base_log;
        RationalFit fit = best_rational(ratio, max_denominator, tolerance);
        if (!fit.found) {
            std::ostringstream os;
            os << "log(" << sigmas[l] << ")/log(" << sigmas.front() << ") = " << ratio
               << " admits no rational p/q with q <= " << max_denominator
               << " within " << tolerance;
            result.satisfied = false;
            result.certificate = os.str();
            return result;
        }
        if (!fit.decisive) {
            // A true rational stored as a double matches its fraction far below
            // the Diophantine scale 1/den^2; a generic irrational's best
            // convergent sits near that scale. The band between is undecidable
            // at working precision.
            const double scale = fit.error * static_cast<double>(fit.den) *
                                 static_cast<double>(fit.den);
            std::ostringstream os;
            os << "ratio log(" << sigmas[l] << ")/log(" << sigmas.front()
               << ") is best matched by " << fit.num << "/" << fit.den
               << " with error " << fit.error
               << ", at the Diophantine scale of an irrational";
            if (scale > 1e-3) {
                result.satisfied = false;
                result.certificate = os.str();
                return result;
            }
            throw PrecisionError(os.str() +
                                 "; undecidable at double precision");
        }
        nums[l] = fit.num;
        dens[l] = fit.den;
        lcm_den = lcm64(lcm_den, fit.den);
        if (lcm_den > 1000000000000LL)
            throw PrecisionError("condition_h: denominator lcm overflow");
    }

    // sigma_l = theta^{m_l} with m_l = num_l * (lcm / den_l), m_0 = lcm.
    std::vector<std::int64_t> m(sigmas.size());
    std::int64_t g = 0;
    for (std::size_t l = 0; l < sigmas.size(); ++l) {
        m[l] = nums[l] * (lcm_den / dens[l]);
        g = gcd64(g, m[l]);
    }
    for (auto& v : m) v /= g;
    const double log_theta = base_log * static_cast<double>(g) /
                             static_cast<double>(lcm_den);
    const double theta = std::exp(log_theta);

    // Witness verification against the detection tolerance.
    for (std::size_t l = 0; l < sigmas.size(); ++l) {
        const double lhs = std::log(sigmas[l]);
        const double rhs = static_cast<double>(m[l]) * log_theta;
        if (std::abs(lhs - rhs) > tolerance * std::max(1.0, std::abs(lhs))) {
            std::ostringstream os;
            os << "witness check failed: sigma=" << sigmas[l] << " vs theta^"
               << m[l] << " = " << std::exp(rhs);
            result.satisfied = false;
            result.certificate = os.str();
            return result;
        }
    }

    result.satisfied = true;
    result.theta = theta;
    result.exponents = std::move(m);
    result.v_star = 2.0 * kPi / log_theta;
    std::ostringstream os;
    os << "all atom locations are integer powers of theta=" << theta
       << " with setwise-coprime exponents";
    result.certificate = os.str();
    return result;
}

}  // namespace fragasym
