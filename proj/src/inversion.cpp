#include "fragasym/inversion.hpp"

#include <cmath>

#include "fragasym/asymptotics.hpp"
#include "fragasym/errors.hpp"
#include "fragasym/quadrature.hpp"

namespace fragasym {

namespace {
const double kPi = std::acos(-1.0);
const double kInf = std::numeric_limits<double>::infinity();

struct Integrand {
    const InitialDatum* datum;
    const FragmentationKernel* kernel;
    double nu, t, x;

    Complex operator()(double v) const {
        const Complex s(nu, v);
        Complex f = datum->mellin(s) * std::pow(Complex(x, 0.0), -s);
        if (t > 0.0) f *= std::exp((kernel->mellin(s) - 1.0) * t);
        return f;
    }
};

// Default abscissa: the saddle clamped into the strip when it exists, else
// the minimizer of the integrand's central magnitude over the strip.
double choose_abscissa(const InitialDatum& datum,
                       const FragmentationKernel& kernel, double t, double x) {
    const double p0 = datum.p0(), q0 = datum.q0();
    const double both_finite = std::isfinite(p0) && std::isfinite(q0);
    const double delta = both_finite ? 0.05 * (q0 - p0) : 0.1;
    double lo = std::isfinite(p0) ? p0 + delta : -20.0;
    double hi = std::isfinite(q0) ? q0 - delta : 40.0;
    if (t > 0.0) lo = std::max(lo, kernel.p1() + 0.05);
    if (!(lo < hi)) throw DomainError("inverse_mellin_u: empty contour strip");

    if (t > 0.0 && x > 0.0 && x < 1.0) {
        const double s_plus = saddle_point(kernel, t, x).s_plus;
        return std::min(std::max(s_plus, lo), hi);
    }

    // Grid-minimize log|U0(nu)| + (K(nu)-1) t - nu log(x).
    double best_nu = 0.5 * (lo + hi);
    double best_h = kInf;
    const int n = 400;
    for (int i = 0; i <= n; ++i) {
        const double nu = lo + (hi - lo) * i / n;
        try {
            double h = std::log(std::abs(datum.mellin(Complex(nu, 0.0)))) -
                       nu * std::log(x);
            if (t > 0.0) h += (kernel.K(nu) - 1.0) * t;
            if (h < best_h) {
                best_h = h;
                best_nu = nu;
            }
        } catch (const std::exception&) {
        }
    }
    return best_nu;
}

double choose_half_height(const Integrand& f) {
    const double ref = std::max(std::abs(f(0.0)), std::abs(f(1.0)));
    if (!(ref > 0.0)) return 16.0;
    double V = 16.0;
    for (int i = 0; i < 40; ++i) {
        if (std::abs(f(V)) <= 1e-14 * ref && std::abs(f(-V)) <= 1e-14 * ref)
            return V;
        V *= 2.0;
    }
    throw ConvergenceError(
        "inverse_mellin_u: contour truncation height did not settle");
}
}  // namespace

InversionReport inverse_mellin_u_report(const InitialDatum& datum,
                                        const FragmentationKernel& kernel,
                                        double t, double x,
                                        std::optional<ContourConfig> config) {
    if (!(t >= 0.0)) throw DomainError("inverse_mellin_u: requires t >= 0");
    if (!(x > 0.0)) throw DomainError("inverse_mellin_u: requires x > 0");

    InversionReport report;
    Integrand f{&datum, &kernel, 0.0, t, x};

    Complex total(0.0, 0.0);
    if (config) {
        if (!(config->abscissa > datum.p0() && config->abscissa < datum.q0()))
            throw DomainError("inverse_mellin_u: config abscissa outside strip");
        if (!(config->half_height > 0.0) || config->nodes < 64)
            throw DomainError("inverse_mellin_u: invalid contour config");
        f.nu = config->abscissa;
        const double V = config->half_height;
        if (config->rule == ContourRule::Trapezoid) {
            const int m = config->nodes - 1;
            const double h = 2.0 * V / m;
            total = 0.5 * (f(-V) + f(V));
            for (int i = 1; i < m; ++i) total += f(-V + i * h);
            total *= h;
        } else {
            std::vector<double> gl_x, gl_w;
            gauss_legendre(8, gl_x, gl_w);
            const int panels = std::max(1, config->nodes / 8);
            const double w = 2.0 * V / panels;
            for (int p = 0; p < panels; ++p) {
                const double a = -V + p * w;
                for (int j = 0; j < 8; ++j)
                    total += gl_w[j] * f(a + 0.5 * w * (gl_x[j] + 1.0)) * 0.5 * w;
            }
        }
        report.nodes = config->nodes;
        report.half_height = V;
    } else {
        f.nu = choose_abscissa(datum, kernel, t, x);
        const double V = choose_half_height(f);
        // Incremental trapezoid doubling: T_{2m} = T_m / 2 + h' * (odd nodes).
        long m = 64;
        double h = 2.0 * V / m;
        Complex trap = 0.5 * (f(-V) + f(V));
        for (long i = 1; i < m; ++i) trap += f(-V + i * h);
        Complex result = trap * h;
        const long cap = 1L << 26;
        for (;;) {
            Complex odd(0.0, 0.0);
            for (long i = 0; i < m; ++i) odd += f(-V + (i + 0.5) * h);
            trap = trap + odd;
            m *= 2;
            h *= 0.5;
            const Complex next = trap * h;
            const double diff = std::abs(next - result) /
                                std::max(std::abs(next), 1e-300);
            result = next;
            if (diff < 1e-9 && m >= 512) break;
            if (m > cap)
                throw ConvergenceError(
                    "inverse_mellin_u: node doubling exceeded the budget");
        }
        total = result;
        report.nodes = static_cast<int>(std::min<long>(m + 1, 1L << 30));
        report.half_height = V;
    }

    total /= 2.0 * kPi;
    report.abscissa = f.nu;
    report.value = total.real();
    report.imag_residue = std::abs(total.imag());
    if (report.imag_residue > 1e-6 * std::abs(report.value))
        report.warnings.push_back(
            "conditioning: imaginary residue exceeds 1e-6 of the result");
    return report;
}

double inverse_mellin_u(const InitialDatum& datum,
                        const FragmentationKernel& kernel, double t, double x,
                        std::optional<ContourConfig> config) {
    return inverse_mellin_u_report(datum, kernel, t, x, std::move(config)).value;
}

}  // namespace fragasym
