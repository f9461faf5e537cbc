#include "fragasym/datum.hpp"

#include <algorithm>
#include <cmath>

#include "fragasym/errors.hpp"
#include "fragasym/quadrature.hpp"

namespace fragasym {

namespace {
const double kPi = std::acos(-1.0);
const double kInf = std::numeric_limits<double>::infinity();

QuadratureOptions segment_options(const Complex& s, double len, double rel_tol) {
    QuadratureOptions opts;
    opts.rel_tol = rel_tol;
    opts.abs_tol = 1e-300;
    const double periods = std::abs(s.imag()) * len / (2.0 * kPi);
    opts.min_panels = std::max(1, static_cast<int>(std::ceil(1.5 * periods)) + 1);
    opts.max_subdivisions = std::max(20000, 4 * opts.min_panels);
    return opts;
}

// \int x^{s-1} f(x) dx over x in (e^{y_lo}, e^{y_hi}) computed in y = log x.
// Infinite ends are handled by adding fixed-width shells outward until two
// consecutive shells are negligible.
Complex mellin_in_log(const std::function<double(double)>& f, Complex s,
                      double y_lo, double y_hi, double rel_tol) {
    auto integrand = [&f, s](double y) -> Complex {
        const double v = f(std::exp(y));
        if (v == 0.0) return Complex(0.0, 0.0);
        return v * std::exp(s * y);
    };
    const double core_lo = std::isfinite(y_lo) ? y_lo : std::min(-16.0, y_hi - 1.0);
    const double core_hi = std::isfinite(y_hi) ? y_hi : std::max(16.0, y_lo + 1.0);
    Complex total = integrate(integrand, core_lo, core_hi,
                              segment_options(s, core_hi - core_lo, rel_tol));
    const double shell = 16.0;
    for (int side = 0; side < 2; ++side) {
        const bool lower = (side == 0);
        if (lower ? std::isfinite(y_lo) : std::isfinite(y_hi)) continue;
        double edge = lower ? core_lo : core_hi;
        int quiet = 0;
        for (int k = 0; k < 80; ++k) {
            const double a = lower ? edge - shell : edge;
            const double b = lower ? edge : edge + shell;
            const Complex part =
                integrate(integrand, a, b, segment_options(s, shell, rel_tol));
            total += part;
            edge = lower ? a : b;
            if (std::abs(part) <= rel_tol * std::max(std::abs(total), 1e-300))
                ++quiet;
            else
                quiet = 0;
            if (quiet >= 2) break;
            if (k == 79)
                throw QuadratureError("mellin quadrature: tail did not settle");
        }
    }
    return total;
}
}  // namespace

std::string to_string(DatumForm f) {
    switch (f) {
        case DatumForm::LogGaussian: return "log_gaussian";
        case DatumForm::TwoSidedPower: return "two_sided_power";
        case DatumForm::Indicator: return "indicator";
        case DatumForm::CompactBump: return "compact_bump";
        case DatumForm::Tabulated: return "tabulated";
        case DatumForm::PowerTail: return "power_tail";
    }
    return "?";
}

InitialDatum InitialDatum::log_gaussian(double y_center, double width) {
    if (!(width > 0.0)) throw ValidationError("log_gaussian: width must be positive");
    InitialDatum d;
    d.form_ = DatumForm::LogGaussian;
    d.params_ = {y_center, width};
    d.eval_ = [y_center, width](double x) {
        const double z = (std::log(x) - y_center) / width;
        return std::exp(-0.5 * z * z);
    };
    const double w = width;
    d.closed_mellin_ = [y_center, w](Complex s) {
        return std::sqrt(2.0 * kPi) * w * std::exp(s * y_center + 0.5 * s * s * w * w);
    };
    d.p0_ = -kInf;
    d.q0_ = kInf;
    d.support_lo_ = 0.0;
    d.support_hi_ = kInf;
    d.mass_ = d.closed_mellin_(Complex(2.0, 0.0)).real();
    return d;
}

InitialDatum InitialDatum::two_sided_power(double p0, double q0) {
    if (!(p0 < 1.0 && q0 > 2.0))
        throw ValidationError("two_sided_power: requires p0 < 1 and q0 > 2");
    InitialDatum d;
    d.form_ = DatumForm::TwoSidedPower;
    d.params_ = {p0, q0};
    d.eval_ = [p0, q0](double x) {
        return x <= 1.0 ? std::pow(x, -p0) : std::pow(x, -q0);
    };
    d.closed_mellin_ = [p0, q0](Complex s) {
        return 1.0 / (s - p0) + 1.0 / (q0 - s);
    };
    d.p0_ = p0;
    d.q0_ = q0;
    d.upper_tail_ = UpperTail{1.0, q0, kInf};
    d.lower_tail_ = LowerTail{1.0, p0, -kInf};
    d.support_lo_ = 0.0;
    d.support_hi_ = kInf;
    d.mass_ = 1.0 / (2.0 - p0) + 1.0 / (q0 - 2.0);
    return d;
}

InitialDatum InitialDatum::indicator() {
    InitialDatum d;
    d.form_ = DatumForm::Indicator;
    d.eval_ = [](double x) { return (x > 0.0 && x < 1.0) ? 1.0 : 0.0; };
    d.closed_mellin_ = [](Complex s) { return 1.0 / s; };
    d.p0_ = 0.0;
    d.q0_ = kInf;
    d.lower_tail_ = LowerTail{1.0, 0.0, -kInf};
    d.support_lo_ = 0.0;
    d.support_hi_ = 1.0;
    d.mass_ = 0.5;
    return d;
}

InitialDatum InitialDatum::compact_bump(double x_lo, double x_hi) {
    if (!(x_lo > 0.0 && x_hi > x_lo))
        throw ValidationError("compact_bump: requires 0 < x_lo < x_hi");
    InitialDatum d;
    d.form_ = DatumForm::CompactBump;
    d.params_ = {x_lo, x_hi};
    const double c = 0.5 * (std::log(x_lo) + std::log(x_hi));
    const double h = 0.5 * (std::log(x_hi) - std::log(x_lo));
    d.eval_ = [c, h](double x) {
        const double z = (std::log(x) - c) / h;
        if (std::abs(z) >= 1.0) return 0.0;
        return std::exp(1.0 - 1.0 / (1.0 - z * z));
    };
    d.p0_ = -kInf;
    d.q0_ = kInf;
    d.support_lo_ = x_lo;
    d.support_hi_ = x_hi;
    d.mass_ = d.mellin_quadrature(Complex(2.0, 0.0), std::log(x_lo),
                                  std::log(x_hi), d.eval_)
                  .real();
    return d;
}

InitialDatum InitialDatum::tabulated(std::vector<double> x_grid,
                                     std::vector<double> values, double p0,
                                     double q0) {
    if (x_grid.size() != values.size() || x_grid.size() < 2)
        throw ValidationError("tabulated datum: grid/value size mismatch");
    if (!std::is_sorted(x_grid.begin(), x_grid.end()) || x_grid.front() <= 0.0)
        throw ValidationError("tabulated datum: grid must be increasing and positive");
    for (double v : values)
        if (v < 0.0) throw ValidationError("tabulated datum: negative value");
    InitialDatum d;
    d.form_ = DatumForm::Tabulated;
    d.params_ = {p0, q0};
    d.tab_grid_ = std::move(x_grid);
    d.tab_values_ = std::move(values);
    const auto& g = d.tab_grid_;
    const auto& v = d.tab_values_;
    d.eval_ = [&g, &v](double x) {
        if (x < g.front() || x > g.back()) return 0.0;
        auto it = std::upper_bound(g.begin(), g.end(), x);
        if (it == g.begin()) return v.front();
        if (it == g.end()) return v.back();
        const std::size_t i = static_cast<std::size_t>(it - g.begin());
        const double t = (x - g[i - 1]) / (g[i] - g[i - 1]);
        return v[i - 1] * (1.0 - t) + v[i] * t;
    };
    d.p0_ = p0;
    d.q0_ = q0;
    d.support_lo_ = d.tab_grid_.front();
    d.support_hi_ = d.tab_grid_.back();
    d.mass_ = d.mellin_quadrature(Complex(2.0, 0.0), std::log(d.support_lo_),
                                  std::log(d.support_hi_), d.eval_)
                  .real();
    return d;
}

InitialDatum InitialDatum::power_tail(double a0, double q0) {
    if (!(a0 > 0.0 && q0 > 2.0))
        throw ValidationError("power_tail: requires a0 > 0 and q0 > 2");
    InitialDatum d;
    d.form_ = DatumForm::PowerTail;
    d.params_ = {a0, q0};
    d.eval_ = [a0, q0](double x) { return x >= 1.0 ? a0 * std::pow(x, -q0) : 0.0; };
    d.closed_mellin_ = [a0, q0](Complex s) { return a0 / (q0 - s); };
    d.p0_ = -kInf;
    d.q0_ = q0;
    d.upper_tail_ = UpperTail{a0, q0, kInf};
    d.support_lo_ = 1.0;
    d.support_hi_ = kInf;
    d.mass_ = a0 / (q0 - 2.0);
    return d;
}

double InitialDatum::evaluate(double x) const {
    if (!(x > 0.0)) throw DomainError("evaluate: x must be positive");
    return eval_(x);
}

Complex InitialDatum::mellin_quadrature(
    Complex s, double lo, double hi,
    const std::function<double(double)>& f) const {
    return mellin_in_log(f, s, lo, hi, 1e-10);
}

Complex InitialDatum::mellin(Complex s) const {
    if (!(s.real() > p0_ && s.real() < q0_))
        throw DomainError("mellin: Re(s) outside the strip (p0, q0)");
    if (closed_mellin_) return closed_mellin_(s);
    const double y_lo =
        support_lo_ > 0.0 ? std::log(support_lo_) : -kInf;
    const double y_hi = std::isfinite(support_hi_) ? std::log(support_hi_) : kInf;
    return mellin_in_log(eval_, s, y_lo, y_hi, 1e-10);
}

Complex InitialDatum::meromorphic_extension(Complex s) const {
    const double re = s.real();
    const bool upper_ok = upper_tail_ && re > upper_tail_->q0 && re < upper_tail_->r;
    const bool lower_ok = lower_tail_ && re < lower_tail_->p0 && re > lower_tail_->rho;
    if (!upper_ok && !lower_ok)
        throw DomainError(
            "meromorphic_extension: Re(s) outside (q0, r) and (rho, p0), or "
            "required tail data absent");
    if (upper_ok) {
        const double q0 = upper_tail_->q0, a0 = upper_tail_->a0;
        if (std::abs(s - q0) < 1e-8)
            throw PoleError("meromorphic_extension: s too close to the pole q0");
        if (closed_mellin_) return closed_mellin_(s);  // rational forms extend as-is
        const auto& f = eval_;
        const double y_lo = support_lo_ > 0.0 ? std::log(support_lo_) : -kInf;
        Complex below = mellin_in_log(f, s, y_lo, 0.0, 1e-10);
        Complex above = mellin_in_log(
            [&f, a0, q0](double x) { return f(x) - a0 * std::pow(x, -q0); }, s,
            0.0, kInf, 1e-10);
        return below - a0 / (s - q0) + above;
    }
    const double p0 = lower_tail_->p0, b0 = lower_tail_->b0;
    if (std::abs(s - p0) < 1e-8)
        throw PoleError("meromorphic_extension: s too close to the pole p0");
    if (closed_mellin_) return closed_mellin_(s);
    const auto& f = eval_;
    const double y_hi = std::isfinite(support_hi_) ? std::log(support_hi_) : kInf;
    Complex below = mellin_in_log(
        [&f, b0, p0](double x) { return f(x) - b0 * std::pow(x, -p0); }, s, -kInf,
        0.0, 1e-10);
    Complex above = mellin_in_log(f, s, 0.0, y_hi, 1e-10);
    return below + b0 / (s - p0) + above;
}

DatumReport validate_datum(const InitialDatum& datum) {
    DatumReport report;

    double min_val = 0.0;
    for (int i = 0; i <= 160; ++i) {
        const double x = std::pow(10.0, -8.0 + 0.1 * i);
        min_val = std::min(min_val, datum.evaluate(x));
    }
    report.checks.push_back({"nonnegative_on_sample", min_val, min_val >= 0.0});

    bool integrable = std::isfinite(datum.mass()) && datum.mass() > 0.0;
    double l1 = std::nan("");
    try {
        // \int u0 (1+x) dx = U0(1) + U0(2); U0(1) needs p0 < 1.
        const double probe = std::max(datum.p0() + 1e-3, 0.999);
        l1 = datum.mellin(Complex(std::min(1.0, probe), 0.0)).real() + datum.mass();
        integrable = integrable && std::isfinite(l1);
    } catch (const std::exception&) {
        integrable = false;
    }
    report.checks.push_back({"weighted_L1_finite", l1, integrable});

    if (datum.upper_tail()) {
        const auto& tail = *datum.upper_tail();
        bool tail_ok = true;
        double worst = 0.0;
        // Fit the constant C at x=10 and confirm the bound at larger x.
        const double dev10 = std::abs(datum.evaluate(10.0) -
                                      tail.a0 * std::pow(10.0, -tail.q0));
        const double r_eff = std::isfinite(tail.r) ? tail.r : tail.q0 + 2.0;
        const double C = 2.0 * dev10 * std::pow(10.0, r_eff) + 1e-12;
        for (double x : {100.0, 1000.0}) {
            const double dev =
                std::abs(datum.evaluate(x) - tail.a0 * std::pow(x, -tail.q0));
            const double bound = C * std::pow(x, -r_eff);
            worst = std::max(worst, dev - bound);
            if (dev > bound) tail_ok = false;
        }
        report.checks.push_back({"upper_tail_bound", worst, tail_ok});
    }

    if (datum.has_closed_form_mellin()) {
        // Deterministic probe points spread across the strip.
        const double lo = std::max(datum.p0(), -6.0);
        const double hi = std::min(datum.q0(), 8.0);
        bool match = true;
        double worst = 0.0;
        for (int i = 1; i <= 5; ++i) {
            const double re = lo + (hi - lo) * i / 6.0;
            const Complex s(re, 0.3 * i);
            const Complex closed = datum.mellin(s);
            double y_lo = datum.support_lo() > 0.0 ? std::log(datum.support_lo())
                                                   : -kInf;
            double y_hi = std::isfinite(datum.support_hi())
                              ? std::log(datum.support_hi())
                              : kInf;
            const Complex direct = mellin_in_log(
                [&datum](double x) { return datum.evaluate(x); }, s, y_lo, y_hi,
                1e-10);
            const double rel = std::abs(closed - direct) /
                               std::max(std::abs(closed), 1e-300);
            worst = std::max(worst, rel);
            if (rel > 1e-8) match = false;
        }
        report.checks.push_back({"closed_form_matches_quadrature", worst, match});
    }

    report.pass = true;
    for (const auto& c : report.checks) report.pass = report.pass && c.pass;
    return report;
}

}  // namespace fragasym
