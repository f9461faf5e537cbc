#include "fragasym/asymptotics.hpp"

#include <cmath>

#include "fragasym/errors.hpp"
#include "fragasym/roots.hpp"

namespace fragasym {

namespace {
const double kPi = std::acos(-1.0);
const double kInf = std::numeric_limits<double>::infinity();

double upper_tail_value(const InitialDatum& datum,
                        const FragmentationKernel& kernel, double t, double x) {
    const auto& tail = *datum.upper_tail();
    return tail.a0 * std::pow(x, -tail.q0) *
           std::exp((kernel.K(tail.q0) - 1.0) * t);
}

double lower_tail_value(const InitialDatum& datum,
                        const FragmentationKernel& kernel, double t, double x) {
    const auto& tail = *datum.lower_tail();
    return tail.b0 * std::pow(x, -tail.p0) *
           std::exp((kernel.K(tail.p0) - 1.0) * t);
}

double bulk_prefactor(const FragmentationKernel& kernel, const SaddleData& sd) {
    return std::pow(sd.x, -sd.s_plus) *
           std::exp((kernel.K(sd.s_plus) - 1.0) * sd.t) /
           std::sqrt(2.0 * kPi * sd.t * sd.K2_at_saddle);
}
}  // namespace

std::string to_string(Regime r) {
    switch (r) {
        case Regime::T1_large_x: return "T1_large_x";
        case Regime::T2_lower: return "T2_lower";
        case Regime::T2_upper: return "T2_upper";
        case Regime::T3a_bulk: return "T3a_bulk";
        case Regime::T3b_oscillatory: return "T3b_oscillatory";
    }
    return "?";
}

Complex phi_eval(const FragmentationKernel& kernel, Complex s, double t,
                 double x) {
    return -s * std::log(x) + t * kernel.mellin(s);
}

SaddleData saddle_point(const FragmentationKernel& kernel, double t, double x) {
    if (!(t > 0.0)) throw DomainError("saddle_point: requires t > 0");
    if (!(x > 0.0 && x < 1.0)) throw DomainError("saddle_point: requires 0 < x < 1");
    const double target = std::log(x) / t;  // < 0; K' is increasing onto (-inf, 0)
    const double p1 = kernel.p1();

    // Bracket [a, b] with K'(a) < target < K'(b). K' -> 0^- as s -> inf and
    // K' -> -inf at p1 (or as s -> -inf for purely atomic kernels).
    double b = 2.0;
    for (int i = 0; i < 200 && kernel.dK(b) <= target; ++i) b = 2.0 * b + 1.0;
    if (kernel.dK(b) <= target)
        throw BracketError("saddle_point: K' never exceeds log(x)/t");
    double a;
    if (std::isfinite(p1)) {
        double gap = std::min(1.0, 0.5 * (b - p1));
        a = p1 + gap;
        for (int i = 0; i < 200 && kernel.dK(a) >= target; ++i) {
            gap *= 0.5;
            a = p1 + gap;
        }
    } else {
        a = std::min(b - 1.0, -1.0);
        for (int i = 0; i < 200 && kernel.dK(a) >= target; ++i)
            a = 2.0 * a - 1.0;
    }
    if (kernel.dK(a) >= target)
        throw BracketError("saddle_point: K' never drops below log(x)/t");

    auto f = [&kernel, target](double s) { return kernel.dK(s) - target; };
    auto df = [&kernel](double s) { return kernel.d2K(s); };
    RootOptions opts;
    opts.x_tol = 1e-14;
    const double x0 = (a < 2.0 && 2.0 < b) ? 2.0 : 0.5 * (a + b);
    const double s_plus = newton_bisect(f, df, a, b, x0, opts);

    SaddleData sd;
    sd.s_plus = s_plus;
    sd.t = t;
    sd.x = x;
    sd.phi_at_saddle = -s_plus * std::log(x) + t * kernel.K(s_plus);
    sd.K2_at_saddle = kernel.d2K(s_plus);
    return sd;
}

AsymptoticValue leading_term(const InitialDatum& datum,
                             const FragmentationKernel& kernel, double t,
                             double x) {
    if (!(t > 0.0)) throw DomainError("leading_term: requires t > 0");
    if (!(x > 0.0)) throw DomainError("leading_term: requires x > 0");
    AsymptoticValue out;

    if (x >= 1.0) {
        if (!datum.upper_tail() || !std::isfinite(datum.q0()))
            throw MissingTailError(
                "leading_term: x >= 1 requires upper tail data (a0, q0)");
        out.regime = Regime::T1_large_x;
        out.value = upper_tail_value(datum, kernel, t, x);
        return out;
    }

    SaddleData sd = saddle_point(kernel, t, x);
    const double q0 = datum.q0();
    const double p0 = datum.p0();

    if (std::isfinite(q0) && sd.s_plus > q0) {
        if (!datum.upper_tail())
            throw MissingTailError(
                "leading_term: regime s_plus > q0 requires upper tail data");
        out.regime = Regime::T2_upper;
        out.value = upper_tail_value(datum, kernel, t, x);
        out.saddle = sd;
        return out;
    }
    if (std::isfinite(p0) && sd.s_plus < p0) {
        if (!datum.lower_tail())
            throw MissingTailError(
                "leading_term: regime s_plus < p0 requires lower tail data");
        out.regime = Regime::T2_lower;
        out.value = lower_tail_value(datum, kernel, t, x);
        out.saddle = sd;
        return out;
    }

    if (sd.s_plus == p0 || sd.s_plus == q0)
        out.warnings.push_back(
            "saddle coincides with a strip boundary; bulk formula used outside "
            "its stated range");
    out.regime = Regime::T3a_bulk;
    out.saddle = sd;
    out.value = datum.mellin(Complex(sd.s_plus, 0.0)).real() *
                bulk_prefactor(kernel, sd);
    if (kernel.is_purely_atomic()) {
        auto ch = condition_h(kernel.atom_list());
        if (ch.satisfied)
            out.warnings.push_back(
                "kernel satisfies Condition H: the bulk value oscillates; use "
                "theorem3b_series for the full leading term");
    }
    return out;
}

AsymptoticValue theorem3b_series(const InitialDatum& datum,
                                 const FragmentationKernel& kernel, double t,
                                 double x, int k_max) {
    if (!(t > 0.0) || !(x > 0.0 && x < 1.0))
        throw DomainError("theorem3b_series: requires t > 0 and 0 < x < 1");
    if (k_max < 0) throw DomainError("theorem3b_series: k_max must be >= 0");
    if (!kernel.is_purely_atomic())
        throw ConditionHError("theorem3b_series: kernel is not purely atomic");
    auto ch = condition_h(kernel.atom_list());
    if (!ch.satisfied)
        throw ConditionHError("theorem3b_series: " + ch.certificate);

    SaddleData sd = saddle_point(kernel, t, x);
    if (!(sd.s_plus > datum.p0() && sd.s_plus < datum.q0()))
        throw DomainError("theorem3b_series: saddle outside the strip (p0, q0)");

    const double v_star = ch.v_star;
    const double lx = std::log(x);
    double sum = datum.mellin(Complex(sd.s_plus, 0.0)).real();
    double last_mag = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        const Complex s_k(sd.s_plus, k * v_star);
        const Complex term =
            datum.mellin(s_k) * std::exp(Complex(0.0, -k * v_star * lx));
        sum += 2.0 * term.real();
        last_mag = std::abs(term);
    }

    AsymptoticValue out;
    out.regime = Regime::T3b_oscillatory;
    out.saddle = sd;
    out.k_used = k_max;
    out.value = sum * bulk_prefactor(kernel, sd);
    // |U0(s_k)| <= C / (k v*)^2 gives a tail sum ~ 2C / (v*^2 k_max).
    if (k_max >= 1) {
        const double C = last_mag * k_max * k_max * v_star * v_star;
        out.tail_bound =
            2.0 * C / (v_star * v_star * k_max) * bulk_prefactor(kernel, sd);
    } else {
        const double C =
            std::abs(datum.mellin(Complex(sd.s_plus, v_star))) * v_star * v_star;
        out.tail_bound = 2.0 * C / (v_star * v_star) * bulk_prefactor(kernel, sd);
    }
    return out;
}

AsymptoticValue theorem3b_auto(const InitialDatum& datum,
                               const FragmentationKernel& kernel, double t,
                               double x, int k_start) {
    int k = std::max(1, k_start);
    for (;;) {
        AsymptoticValue v = theorem3b_series(datum, kernel, t, x, k);
        if (v.tail_bound <= 1e-10 * std::max(std::abs(v.value), 1e-300) ||
            k >= (1 << 15))
            return v;
        k *= 2;
    }
}

double poisson_approx(const InitialDatum& datum, double theta,
                      const FragmentationKernel& kernel, double t, double x) {
    if (!(theta > 0.0 && theta < 1.0))
        throw DomainError("poisson_approx: theta must lie in (0, 1)");
    if (!kernel.is_purely_atomic())
        throw ConditionHError("poisson_approx: kernel is not purely atomic");
    auto ch = condition_h(kernel.atom_list());
    if (!ch.satisfied)
        throw ConditionHError("poisson_approx: " + ch.certificate);
    if (std::abs(ch.theta - theta) > 1e-9)
        throw ConditionHError("poisson_approx: theta does not match the kernel");

    SaddleData sd = saddle_point(kernel, t, x);
    if (!(sd.s_plus > datum.p0() && sd.s_plus < datum.q0()))
        throw DomainError("poisson_approx: saddle outside the strip (p0, q0)");

    const double log_theta = std::log(theta);
    // sum_n u0(theta^n x) theta^{n s_plus}. A mandatory sweep carries
    // theta^n x across any region where u0 could live (|log| up to ~120);
    // beyond it the loop stops once terms fall to 1e-16 of the running sum.
    const double lx = std::log(x);
    const int n_span = static_cast<int>(
        std::ceil((std::abs(lx) + 120.0) / std::abs(log_theta)));
    double sum = datum.evaluate(x);
    for (int dir = -1; dir <= 1; dir += 2) {
        int quiet = 0;
        for (int n = dir; std::abs(n) <= n_span + 100000; n += dir) {
            const double xn = std::exp(n * log_theta + lx);
            const double u0_val = datum.evaluate(xn);
            const double term =
                u0_val > 0.0 ? u0_val * std::exp(n * log_theta * sd.s_plus) : 0.0;
            sum += term;
            if (std::abs(term) <= 1e-16 * std::max(std::abs(sum), 1e-300))
                ++quiet;
            else
                quiet = 0;
            if (std::abs(n) >= n_span && quiet >= 4) break;
        }
    }
    return std::abs(log_theta) * sum *
           std::exp((kernel.K(sd.s_plus) - 1.0) * t) /
           std::sqrt(2.0 * kPi * t * sd.K2_at_saddle);
}

}  // namespace fragasym
