#include "fragasym/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "fragasym/errors.hpp"
#include "fragasym/interp.hpp"
#include "fragasym/quadrature.hpp"

namespace fragasym {

namespace {
// Trapezoid integral of e^{2y} n over the uniform grid.
double grid_mass(const std::vector<double>& n, double y_min, double dy) {
    double m = 0.0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const double w = (i == 0 || i + 1 == n.size()) ? 0.5 : 1.0;
        m += w * std::exp(2.0 * (y_min + dy * static_cast<double>(i))) * n[i];
    }
    return m * dy;
}
}  // namespace

double LogGridSolution::evaluate(std::size_t snapshot_index, double x) const {
    if (snapshot_index >= snapshots.size())
        throw RangeError("LogGridSolution::evaluate: bad snapshot index");
    if (!(x > 0.0)) throw RangeError("LogGridSolution::evaluate: x must be > 0");
    return interp_cubic_uniform(snapshots[snapshot_index].values, y_min, dy,
                                std::log(x));
}

std::size_t LogGridSolution::snapshot_near(double t) const {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < snapshots.size(); ++i) {
        const double d = std::abs(snapshots[i].t - t);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

FragOperator::FragOperator(const FragmentationKernel& kernel, double dy,
                           std::size_t n)
    : n_(n) {
    for (const auto& atom : kernel.atom_list()) {
        const double z = -std::log(atom.sigma);  // shift in y, > 0
        const double w = atom.weight / atom.sigma;
        const double q = z / dy;
        const double j0 = std::floor(q);
        const double f = q - j0;
        if (f < 1e-12 || f > 1.0 - 1e-12) {
            shifts_.push_back(
                {static_cast<std::ptrdiff_t>(std::llround(q)), w});
        } else {
            // 4-point Lagrange stencil at offsets j0-1 .. j0+2.
            const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(j0);
            shifts_.push_back({j - 1, -w * f * (f - 1.0) * (f - 2.0) / 6.0});
            shifts_.push_back({j, w * (f + 1.0) * (f - 1.0) * (f - 2.0) / 2.0});
            shifts_.push_back({j + 1, -w * (f + 1.0) * f * (f - 2.0) / 2.0});
            shifts_.push_back({j + 2, w * (f + 1.0) * f * (f - 1.0) / 6.0});
        }
    }
    // kappa(z) = g(e^{-z}) with g the density part of k0.
    std::function<double(double)> kappa;
    switch (kernel.form()) {
        case KernelForm::Homogeneous:
            kappa = [](double) { return 2.0; };
            break;
        case KernelForm::Power: {
            const double a = kernel.power_exponent();
            kappa = [a](double z) { return (a + 2.0) * std::exp(-a * z); };
            break;
        }
        default:
            if (kernel.has_density()) {
                const PiecewiseLinearDensity* dens = &kernel.density();
                kappa = [dens](double z) { return dens->at(std::exp(-z)); };
            }
            break;
    }
    if (kappa) {
        // Gregory-weighted convolution on grid-aligned nodes z = j dy spanning
        // the whole window (n vanishes beyond y_max, so no truncation error).
        const std::size_t J = n_ > 0 ? n_ - 1 : 0;
        std::vector<double> weights =
            gregory_weights(static_cast<int>(J + 1), dy);
        conv_.resize(J + 1);
        for (std::size_t j = 0; j <= J; ++j)
            conv_[j] = weights[j] * kappa(static_cast<double>(j) * dy);
    }
}

void FragOperator::apply(const std::vector<double>& n,
                         std::vector<double>& out) const {
    const std::ptrdiff_t N = static_cast<std::ptrdiff_t>(n_);
    out.assign(n_, 0.0);
    for (const auto& sh : shifts_) {
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, -sh.offset);
        const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(N, N - sh.offset);
        for (std::ptrdiff_t i = lo; i < hi; ++i)
            out[i] += sh.weight * n[i + sh.offset];
    }
    if (!conv_.empty()) {
        const std::ptrdiff_t J = static_cast<std::ptrdiff_t>(conv_.size()) - 1;
        for (std::ptrdiff_t i = 0; i < N; ++i) {
            double acc = 0.0;
            const std::ptrdiff_t jmax = std::min<std::ptrdiff_t>(J, N - 1 - i);
            for (std::ptrdiff_t j = 0; j <= jmax; ++j)
                acc += conv_[j] * n[i + j];
            out[i] += acc;
        }
    }
}

LogGridSolution simulate_log_grid(const FragmentationKernel& kernel,
                                  const InitialDatum& datum, double y_min,
                                  double y_max, double dy, double dt,
                                  double t_end, int snapshot_stride) {
    if (!(dy > 0.0 && dt > 0.0 && y_max > y_min && t_end >= 0.0))
        throw ValidationError("simulate_log_grid: bad grid parameters");
    if (dt * (kernel.K(1.0) + 1.0) > 0.5)
        throw StabilityError(
            "simulate_log_grid: dt (K(1)+1) exceeds the stability bound 0.5");

    LogGridSolution sol;
    sol.y_min = y_min;
    sol.y_max = y_max;
    sol.dy = dy;
    const std::size_t N =
        static_cast<std::size_t>(std::floor((y_max - y_min) / dy + 0.5)) + 1;

    const long steps = std::max(1L, static_cast<long>(std::ceil(t_end / dt)));
    const double h = t_end > 0.0 ? t_end / static_cast<double>(steps) : dt;
    sol.dt = h;

    std::vector<double> n(N);
    for (std::size_t i = 0; i < N; ++i)
        n[i] = datum.evaluate(std::exp(y_min + dy * static_cast<double>(i)));

    FragOperator frag(kernel, dy, N);
    auto rhs = [&frag](const std::vector<double>& v, std::vector<double>& out) {
        frag.apply(v, out);
        for (std::size_t i = 0; i < v.size(); ++i) out[i] -= v[i];
    };

    const int stride =
        snapshot_stride > 0
            ? snapshot_stride
            : std::max(1, static_cast<int>(steps / 100));
    const double mass0 = grid_mass(n, y_min, dy);
    bool leak_warned = false;

    auto record = [&](double t) {
        sol.snapshots.push_back({t, n});
        MassPoint mp;
        mp.t = t;
        mp.mass = grid_mass(n, y_min, dy);
        double leak = 0.0;
        for (std::size_t i = 0; i < std::min<std::size_t>(6, N); ++i)
            leak += std::exp(2.0 * (y_min + dy * static_cast<double>(i))) * n[i] *
                    dy;
        mp.leak = mass0 > 0.0 ? leak / mass0 : 0.0;
        sol.mass_series.push_back(mp);
        if (!leak_warned && mp.leak > 1e-8) {
            sol.warnings.push_back(
                "support overflow: more than 1e-8 of the relative mass sits "
                "within 5 dy of y_min (absorbing boundary)");
            leak_warned = true;
        }
    };
    record(0.0);

    std::vector<double> k1(N), k2(N), k3(N), k4(N), tmp(N);
    for (long step = 0; step < steps && t_end > 0.0; ++step) {
        rhs(n, k1);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = n[i] + 0.5 * h * k1[i];
        rhs(tmp, k2);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = n[i] + 0.5 * h * k2[i];
        rhs(tmp, k3);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = n[i] + h * k3[i];
        rhs(tmp, k4);
        for (std::size_t i = 0; i < N; ++i)
            n[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        const long done = step + 1;
        if (done == steps || done % stride == 0)
            record(h * static_cast<double>(done));
    }
    return sol;
}

std::vector<double> picard_solve(const FragmentationKernel& kernel,
                                 const InitialDatum& datum, double t,
                                 const std::vector<double>& x_grid) {
    if (!(t >= 0.0)) throw DomainError("picard_solve: requires t >= 0");
    if (x_grid.size() < 8)
        throw ValidationError("picard_solve: x_grid too small");
    const std::size_t N = x_grid.size();
    const double dy = std::log(x_grid[1] / x_grid[0]);
    for (std::size_t i = 1; i < N; ++i) {
        const double step = std::log(x_grid[i] / x_grid[i - 1]);
        if (std::abs(step - dy) > 1e-9 * std::abs(dy))
            throw ValidationError("picard_solve: x_grid is not log-spaced");
    }

    FragOperator frag(kernel, dy, N);

    std::vector<double> w(N);
    for (std::size_t i = 0; i < N; ++i) w[i] = datum.evaluate(x_grid[i]);
    if (t == 0.0) return w;

    auto l1_norm = [&](const std::vector<double>& a,
                       const std::vector<double>& b) {
        double s = 0.0;
        for (std::size_t i = 0; i < N; ++i)
            s += std::abs(a[i] - b[i]) * (1.0 + x_grid[i]) * x_grid[i];
        return s * dy;  // L^1((1+x)dx) with dx = x dy on the log grid
    };

    const int m = 8;  // collocation nodes per sub-interval
    std::vector<double> gl_x, gl_w;
    gauss_legendre(m, gl_x, gl_w);
    // A[j][k] = \int_{-1}^{xi_j} L_k; end weights are the GL weights.
    std::vector<std::vector<double>> A(m, std::vector<double>(m, 0.0));
    {
        std::vector<double> fine_x, fine_w;
        gauss_legendre(24, fine_x, fine_w);
        for (int j = 0; j < m; ++j) {
            const double a = -1.0, b = gl_x[j];
            for (int q = 0; q < 24; ++q) {
                const double xi = a + 0.5 * (b - a) * (fine_x[q] + 1.0);
                const double wq = 0.5 * (b - a) * fine_w[q];
                for (int k = 0; k < m; ++k) {
                    double L = 1.0;
                    for (int l = 0; l < m; ++l)
                        if (l != k) L *= (xi - gl_x[l]) / (gl_x[k] - gl_x[l]);
                    A[j][k] += wq * L;
                }
            }
        }
    }

    double remaining = t;
    std::vector<std::vector<double>> wk(m, std::vector<double>(N));
    std::vector<std::vector<double>> Fk(m, std::vector<double>(N));
    std::vector<double> next(N);
    while (remaining > 1e-14) {
        const double tau = std::min(0.5, remaining);
        for (int j = 0; j < m; ++j) wk[j] = w;
        double prev_diff = std::numeric_limits<double>::infinity();
        int worse = 0;
        for (int iter = 0;; ++iter) {
            for (int j = 0; j < m; ++j) frag.apply(wk[j], Fk[j]);
            double diff = 0.0;
            for (int j = 0; j < m; ++j) {
                for (std::size_t i = 0; i < N; ++i) {
                    double acc = w[i];
                    for (int k = 0; k < m; ++k)
                        acc += 0.5 * tau * A[j][k] * Fk[k][i];
                    next[i] = acc;
                }
                diff += l1_norm(next, wk[j]);
                wk[j].swap(next);
            }
            if (diff < 1e-10) break;
            if (diff > prev_diff * 1.0001) {
                if (++worse >= 3)
                    throw ContractionError(
                        "picard_solve: iterates diverge (quadrature "
                        "inconsistency)");
            } else {
                worse = 0;
            }
            prev_diff = diff;
            if (iter > 400)
                throw ContractionError("picard_solve: iteration cap reached");
        }
        for (int j = 0; j < m; ++j) frag.apply(wk[j], Fk[j]);
        for (std::size_t i = 0; i < N; ++i) {
            double acc = w[i];
            for (int k = 0; k < m; ++k) acc += 0.5 * tau * gl_w[k] * Fk[k][i];
            w[i] = acc;
        }
        remaining -= tau;
    }

    for (std::size_t i = 0; i < N; ++i) w[i] *= std::exp(-t);
    return w;
}

DiagnosticsReport dirac_diagnostics(const LogGridSolution& solution,
                                    const FragmentationKernel& kernel,
                                    const std::vector<double>& z_grid) {
    DiagnosticsReport rep;
    rep.z_grid = z_grid;
    const std::size_t N = solution.n_points();
    const double dy = solution.dy;
    const double y_min = solution.y_min;

    for (const auto& snap : solution.snapshots) {
        rep.times.push_back(snap.t);
        std::vector<double> H_row, D_row;
        for (double z : z_grid) {
            double H = 0.0, D = 0.0;
            const double yz = z > 0.0 ? std::log(z) : -1e300;
            for (std::size_t i = 0; i < N; ++i) {
                const double y = y_min + dy * static_cast<double>(i);
                if (y < yz) continue;
                const double w = (i == 0 || i + 1 == N) ? 0.5 : 1.0;
                const double xu = std::exp(2.0 * y) * snap.values[i] * w * dy;
                H += xu;
                if (z > 0.0)
                    D -= kernel.cumulative_first_moment(z * std::exp(-y)) * xu;
            }
            H_row.push_back(H);
            D_row.push_back(D);
            if (D > 1e-12 * std::max(H, 1.0)) rep.dissipation_nonpositive = false;
        }
        rep.entropy.push_back(std::move(H_row));
        rep.dissipation.push_back(std::move(D_row));

        // Central 90% interval of the mass measure x u.
        std::vector<double> cum(N, 0.0);
        double total = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double y = y_min + dy * static_cast<double>(i);
            total += std::exp(2.0 * y) * snap.values[i] * dy;
            cum[i] = total;
        }
        double z_lo = std::exp(y_min), z_hi = std::exp(y_min + dy * (N - 1));
        if (total > 0.0) {
            for (std::size_t i = 0; i < N; ++i)
                if (cum[i] >= 0.05 * total) {
                    z_lo = std::exp(y_min + dy * static_cast<double>(i));
                    break;
                }
            for (std::size_t i = 0; i < N; ++i)
                if (cum[i] >= 0.95 * total) {
                    z_hi = std::exp(y_min + dy * static_cast<double>(i));
                    break;
                }
        }
        rep.quantile_interval.emplace_back(z_lo, z_hi);
    }

    for (std::size_t j = 0; j < z_grid.size(); ++j)
        for (std::size_t i = 1; i < rep.entropy.size(); ++i)
            if (rep.entropy[i][j] >
                rep.entropy[i - 1][j] + 1e-9 * std::max(rep.entropy[0][j], 1.0))
                rep.entropy_nonincreasing_in_t = false;
    return rep;
}

RescaledProfiles rescaled_profiles(
    const InitialDatum& datum, const FragmentationKernel& kernel,
    const std::function<double(double, double)>& u_evaluator, double t) {
    (void)datum;
    if (!(t > 0.0)) throw DomainError("rescaled_profiles: requires t > 0");
    RescaledProfiles out;
    out.y0 = kernel.dK(2.0);
    out.sigma2 = kernel.d2K(2.0);
    const double sigma = std::sqrt(out.sigma2);

    auto moments = [](Profile& p) {
        const std::size_t n = p.grid.size();
        double s0 = 0.0, s1 = 0.0, s2 = 0.0;
        const double h = p.grid[1] - p.grid[0];
        for (std::size_t i = 0; i < n; ++i) {
            const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
            const double v = w * h * p.values[i];
            s0 += v;
            s1 += v * p.grid[i];
            s2 += v * p.grid[i] * p.grid[i];
        }
        p.integral = s0;
        p.mean = s0 != 0.0 ? s1 / s0 : 0.0;
        p.variance = s0 != 0.0 ? s2 / s0 - p.mean * p.mean : 0.0;
    };

    const double half_width = 15.0 * sigma / std::sqrt(t);
    const int n = 1200;
    out.r.grid.resize(n + 1);
    out.r.values.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double y = out.y0 - half_width + 2.0 * half_width * i / n;
        out.r.grid[i] = y;
        out.r.values[i] = t * std::exp(2.0 * t * y) *
                          u_evaluator(t, std::exp(t * y));
    }
    moments(out.r);

    out.r_tilde.grid.resize(n + 1);
    out.r_tilde.values.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double z = -15.0 + 30.0 * i / n;
        const double y = out.y0 + sigma * z / std::sqrt(t);
        out.r_tilde.grid[i] = z;
        out.r_tilde.values[i] = t * std::exp(2.0 * t * y) *
                                u_evaluator(t, std::exp(t * y)) * sigma /
                                std::sqrt(t);
    }
    moments(out.r_tilde);
    return out;
}

double growth_frag_transform(
    const std::function<double(double, double)>& u_evaluator, double c,
    double t, double x, double x_lo, double x_hi) {
    const double pulled = x * std::exp(-c * t);
    if (!(pulled >= x_lo && pulled <= x_hi))
        throw RangeError(
            "growth_frag_transform: pulled-back point leaves the evaluator "
            "range");
    return std::exp(-c * t) * u_evaluator(t, pulled);
}

}  // namespace fragasym
