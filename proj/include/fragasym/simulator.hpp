#ifndef FRAGASYM_SIMULATOR_HPP
#define FRAGASYM_SIMULATOR_HPP

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fragasym/datum.hpp"
#include "fragasym/kernel.hpp"

namespace fragasym {

struct Snapshot {
    double t = 0.0;
    std::vector<double> values;  // n(t, y_i) = u(t, e^{y_i})
};

struct MassPoint {
    double t = 0.0;
    double mass = 0.0;  // M(t) = \int e^{2y} n dy
    double leak = 0.0;  // mass fraction within 5 dy of y_min, relative to M(0)
};

// Solution of \p_t n + n = sum_l (a_l / sigma_l) n(t, y + z_l)
//                        + \int kappa(z) n(t, y + z) dz  on a uniform y-grid.
struct LogGridSolution {
    double y_min = 0.0, y_max = 0.0, dy = 0.0, dt = 0.0;
    std::string integrator = "rk4";
    std::vector<Snapshot> snapshots;
    std::vector<MassPoint> mass_series;
    std::vector<std::string> warnings;

    std::size_t n_points() const {
        return snapshots.empty() ? 0 : snapshots.front().values.size();
    }
    double y_at(std::size_t i) const { return y_min + dy * static_cast<double>(i); }
    // Cubic interpolation of u(t_k, x) from snapshot k; zero outside the grid.
    double evaluate(std::size_t snapshot_index, double x) const;
    // Index of the stored snapshot closest to t.
    std::size_t snapshot_near(double t) const;
};

// Discrete fragmentation gain operator on a uniform y-grid: atoms become
// shifted evaluations (cubic interpolation off-grid), a density becomes a
// Gregory-weighted convolution over grid-aligned nodes.
class FragOperator {
public:
    FragOperator(const FragmentationKernel& kernel, double dy, std::size_t n);
    void apply(const std::vector<double>& n, std::vector<double>& out) const;

private:
    struct Shift {
        std::ptrdiff_t offset;
        double weight;
    };
    std::vector<Shift> shifts_;  // includes the 4-point stencils of off-grid atoms
    std::vector<double> conv_;   // Gregory * kappa at j dy, j = 0..J
    std::size_t n_ = 0;
};

// Explicit RK4 integration to t_end; snapshots stored at t = 0, every
// `snapshot_stride` steps (0 = aim for ~100 stored), and t_end.
LogGridSolution simulate_log_grid(const FragmentationKernel& kernel,
                                  const InitialDatum& datum, double y_min,
                                  double y_max, double dy, double dt,
                                  double t_end, int snapshot_stride = 0);

// Picard fixed-point solution of w = u0 + \int_0^t Frag(w) ds composed over
// sub-intervals of length 1/2, with Gauss-Legendre collocation in time;
// returns u(t, .) = e^{-t} w(t, .) on the given log-spaced x-grid.
std::vector<double> picard_solve(const FragmentationKernel& kernel,
                                 const InitialDatum& datum, double t,
                                 const std::vector<double>& x_grid);

struct DiagnosticsReport {
    std::vector<double> z_grid;
    std::vector<double> times;
    // entropy[i][j] = H(z_j; t_i) = \int_{z_j}^inf x u dx; dissipation
    // likewise with the kernel's cumulative first moment inside.
    std::vector<std::vector<double>> entropy;
    std::vector<std::vector<double>> dissipation;
    // Interval [z_lo, z_hi] carrying the central 90% of the mass measure.
    std::vector<std::pair<double, double>> quantile_interval;
    bool dissipation_nonpositive = true;
    bool entropy_nonincreasing_in_t = true;
};

DiagnosticsReport dirac_diagnostics(const LogGridSolution& solution,
                                    const FragmentationKernel& kernel,
                                    const std::vector<double>& z_grid);

struct Profile {
    std::vector<double> grid;
    std::vector<double> values;
    double integral = 0.0;
    double mean = 0.0;
    double variance = 0.0;
};

struct RescaledProfiles {
    Profile r;        // r(t, y) = t e^{2ty} u(t, e^{ty})
    Profile r_tilde;  // r(t, y0 + sigma z / sqrt(t)) sigma / sqrt(t)
    double y0 = 0.0;      // K'(2)
    double sigma2 = 0.0;  // K''(2)
};

RescaledProfiles rescaled_profiles(
    const InitialDatum& datum, const FragmentationKernel& kernel,
    const std::function<double(double, double)>& u_evaluator, double t);

// v(t, x) = e^{-ct} u(t, x e^{-ct}); the pulled-back point must lie inside
// [x_lo, x_hi], the evaluator's range.
double growth_frag_transform(
    const std::function<double(double, double)>& u_evaluator, double c,
    double t, double x, double x_lo = 0.0,
    double x_hi = std::numeric_limits<double>::infinity());

}  // namespace fragasym

#endif
