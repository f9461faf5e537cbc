// fragasym: command-line front end for the fragmentation-equation toolkit.
//
// Subcommands wire kernels, initial data, solvers, asymptotic formulas, and
// region analysis into reproducible experiments with CSV/JSON outputs.
// Exit codes: 0 success, 1 validation failure, 2 numerical failure.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "fragasym/asymptotics.hpp"
#include "fragasym/datum.hpp"
#include "fragasym/errors.hpp"
#include "fragasym/interp.hpp"
#include "fragasym/inversion.hpp"
#include "fragasym/io.hpp"
#include "fragasym/kernel.hpp"
#include "fragasym/regions.hpp"
#include "fragasym/simulator.hpp"

namespace {

using namespace fragasym;

int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("FRAGASYM_THREADS")) {
        const int bound = std::atoi(env);
        if (bound >= 1) n = std::min(n, bound);
    }
    return n;
}

// Deterministic fan-out: results land in index order regardless of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    const int workers = std::min<int>(worker_count(), static_cast<int>(count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

struct CommonArgs {
    std::string config_path;
    std::string kernel_path;
    std::string datum_path;
    std::vector<double> t_list;
    std::vector<double> x_list;
    double c = 0.0;
    bool c_set = false;
    int k_max = 0;
    bool k_max_set = false;
    std::string out;
    std::string format;
    double y_min = 0.0, y_max = 0.0, dy = 0.0, dt = 0.0, t_end = 0.0;
    bool y_min_set = false, y_max_set = false, dy_set = false, dt_set = false,
         t_end_set = false;
};

void add_common_flags(CLI::App* cmd, CommonArgs& args, bool with_grid) {
    cmd->add_option("config", args.config_path, "experiment config (JSON)");
    cmd->add_option("--kernel", args.kernel_path, "kernel spec file");
    cmd->add_option("--datum", args.datum_path, "initial datum spec file");
    cmd->add_option("--t", args.t_list, "time values")->delimiter(',');
    cmd->add_option("--x", args.x_list, "size values")->delimiter(',');
    cmd->add_option("--c", args.c, "growth rate")->each([&](const std::string&) {
        args.c_set = true;
    });
    cmd->add_option("--kmax", args.k_max, "oscillatory series truncation")
        ->each([&](const std::string&) { args.k_max_set = true; });
    cmd->add_option("--out", args.out, "output path (stdout when omitted)");
    cmd->add_option("--format", args.format, "csv | json");
    if (with_grid) {
        cmd->add_option("--ymin", args.y_min)->each([&](const std::string&) {
            args.y_min_set = true;
        });
        cmd->add_option("--ymax", args.y_max)->each([&](const std::string&) {
            args.y_max_set = true;
        });
        cmd->add_option("--dy", args.dy)->each([&](const std::string&) {
            args.dy_set = true;
        });
        cmd->add_option("--dt", args.dt)->each([&](const std::string&) {
            args.dt_set = true;
        });
        cmd->add_option("--tend", args.t_end)->each([&](const std::string&) {
            args.t_end_set = true;
        });
    }
}

// Merge the config file (when given) with command-line overrides; flags win.
struct ResolvedConfig {
    ExperimentConfig config;
    std::string base_dir;
};

ResolvedConfig resolve(const CommonArgs& args) {
    ResolvedConfig r;
    if (!args.config_path.empty()) {
        r.config = parse_config(load_json_file(args.config_path));
        r.base_dir =
            std::filesystem::path(args.config_path).parent_path().string();
    }
    if (!args.kernel_path.empty())
        r.config.kernel_spec = OrderedJson{{"file", args.kernel_path}};
    if (!args.datum_path.empty())
        r.config.datum_spec = OrderedJson{{"file", args.datum_path}};
    if (!args.t_list.empty()) r.config.t_list = args.t_list;
    if (!args.x_list.empty()) r.config.x_list = args.x_list;
    if (args.c_set) r.config.c = args.c;
    if (args.k_max_set) r.config.k_max = args.k_max;
    if (!args.out.empty()) r.config.out = args.out;
    if (!args.format.empty()) {
        if (args.format != "csv" && args.format != "json")
            throw ValidationError("--format must be 'csv' or 'json'");
        r.config.format = args.format;
    }
    SimGridSpec grid = r.config.grid.value_or(SimGridSpec{});
    if (args.y_min_set) grid.y_min = args.y_min;
    if (args.y_max_set) grid.y_max = args.y_max;
    if (args.dy_set) grid.dy = args.dy;
    if (args.dt_set) grid.dt = args.dt;
    if (args.t_end_set) grid.t_end = args.t_end;
    if (args.y_min_set || args.y_max_set || args.dy_set || args.dt_set ||
        args.t_end_set || r.config.grid)
        r.config.grid = grid;
    return r;
}

void emit(const std::string& out, const std::string& content) {
    if (out.empty())
        std::cout << content;
    else
        write_text_file(out, content);
}

std::string sibling_path(const std::string& out, const std::string& suffix) {
    std::filesystem::path p(out);
    std::filesystem::path q = p.parent_path() /
                              (p.stem().string() + suffix + p.extension().string());
    return q.string();
}

std::string dump(const OrderedJson& j) { return j.dump(2) + "\n"; }

OrderedJson checks_to_json(const AdmissibilityReport& report) {
    OrderedJson checks = OrderedJson::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"measured", c.measured},
                          {"expected", c.expected},
                          {"pass", c.pass}});
    }
    return checks;
}

// --- kernel check ---------------------------------------------------------

int cmd_kernel_check(const std::string& spec_path, const std::string& out) {
    auto kernel = parse_kernel_spec(load_json_file(spec_path));
    auto report = check_admissible(kernel);
    OrderedJson j;
    j["kernel"] = kernel_to_json(kernel);
    j["p1"] = kernel.p1();
    j["K"] = {{"1", kernel.K(1.0)}, {"2", kernel.K(2.0)}, {"3", kernel.K(3.0)}};
    j["checks"] = checks_to_json(report);
    j["pass"] = report.pass;
    emit(out, dump(j));
    return report.pass ? 0 : 1;
}

// --- kernel condition-h ----------------------------------------------------

int cmd_condition_h(const std::string& spec_path, const std::string& out) {
    auto kernel = parse_kernel_spec(load_json_file(spec_path));
    if (!kernel.is_purely_atomic() && kernel.form() != KernelForm::Mitosis)
        throw ValidationError(
            "condition-h requires a purely atomic kernel (atoms or mitosis)");
    std::vector<KernelAtom> atoms = kernel.atom_list();
    if (kernel.form() == KernelForm::Mitosis) atoms = {{0.5, 2.0}};
    auto result = condition_h(atoms);
    OrderedJson j;
    j["satisfied"] = result.satisfied;
    if (result.satisfied) {
        j["theta"] = result.theta;
        j["exponents"] = result.exponents;
        j["v_star"] = result.v_star;
    }
    j["certificate"] = result.certificate;
    emit(out, dump(j));
    return 0;
}

// --- simulate ---------------------------------------------------------------

int cmd_simulate(const CommonArgs& args) {
    auto r = resolve(args);
    auto kernel = kernel_from_config(r.config, r.base_dir);
    auto datum = datum_from_config(r.config, r.base_dir);
    const SimGridSpec g = r.config.grid.value_or(SimGridSpec{});

    auto solution = simulate_log_grid(kernel, datum, g.y_min, g.y_max, g.dy,
                                      g.dt, g.t_end);

    if (r.config.format == "json") {
        OrderedJson j;
        j["grid"] = {{"ymin", solution.y_min},
                     {"ymax", solution.y_max},
                     {"dy", solution.dy},
                     {"dt", solution.dt},
                     {"tend", g.t_end}};
        OrderedJson snaps = OrderedJson::array();
        for (const auto& s : solution.snapshots)
            snaps.push_back({{"t", s.t}, {"n", s.values}});
        j["snapshots"] = std::move(snaps);
        OrderedJson mass = OrderedJson::array();
        for (const auto& m : solution.mass_series)
            mass.push_back({{"t", m.t}, {"mass", m.mass}, {"leak", m.leak}});
        j["mass"] = std::move(mass);
        j["warnings"] = solution.warnings;
        emit(r.config.out, dump(j));
        return 0;
    }

    std::vector<std::vector<double>> rows;
    for (const auto& s : solution.snapshots)
        for (std::size_t i = 0; i < s.values.size(); ++i)
            rows.push_back({s.t, solution.y_at(i), s.values[i]});
    std::vector<std::vector<double>> mass_rows;
    for (const auto& m : solution.mass_series)
        mass_rows.push_back({m.t, m.mass, m.leak});

    if (r.config.out.empty()) {
        std::cout << csv_table("t,y,n", rows);
        std::cout << csv_table("t,mass,leak", mass_rows);
    } else {
        write_text_file(r.config.out, csv_table("t,y,n", rows));
        write_text_file(sibling_path(r.config.out, "_mass"),
                        csv_table("t,mass,leak", mass_rows));
    }
    for (const auto& w : solution.warnings) std::cerr << "warning: " << w << "\n";
    return 0;
}

// --- solve-mellin -----------------------------------------------------------

void require_tx(const ExperimentConfig& config) {
    if (config.t_list.empty())
        throw ValidationError("no time values: pass --t or config field 't'");
    if (config.x_list.empty())
        throw ValidationError("no size values: pass --x or config field 'x'");
}

int cmd_solve_mellin(const CommonArgs& args) {
    auto r = resolve(args);
    auto kernel = kernel_from_config(r.config, r.base_dir);
    auto datum = datum_from_config(r.config, r.base_dir);
    require_tx(r.config);

    const std::size_t count = r.config.t_list.size() * r.config.x_list.size();
    std::vector<std::vector<double>> rows(count);
    parallel_for(count, [&](std::size_t i) {
        const double t = r.config.t_list[i / r.config.x_list.size()];
        const double x = r.config.x_list[i % r.config.x_list.size()];
        rows[i] = {t, x, inverse_mellin_u(datum, kernel, t, x)};
    });

    if (r.config.format == "json") {
        OrderedJson points = OrderedJson::array();
        for (const auto& row : rows)
            points.push_back({{"t", row[0]}, {"x", row[1]}, {"u", row[2]}});
        emit(r.config.out, dump(OrderedJson{{"points", points}}));
    } else {
        emit(r.config.out, csv_table("t,x,u", rows));
    }
    return 0;
}

// --- asymptote ---------------------------------------------------------------

int cmd_asymptote(const CommonArgs& args) {
    auto r = resolve(args);
    auto kernel = kernel_from_config(r.config, r.base_dir);
    auto datum = datum_from_config(r.config, r.base_dir);
    require_tx(r.config);

    std::vector<KernelAtom> atoms = kernel.atom_list();
    if (kernel.form() == KernelForm::Mitosis) atoms = {{0.5, 2.0}};
    ConditionHResult cond;
    if (!atoms.empty() && !kernel.has_density()) cond = condition_h(atoms);

    OrderedJson points = OrderedJson::array();
    std::vector<std::vector<double>> rows;
    std::ostringstream csv;
    csv << "t,x,value,regime,k_used,tail_bound\n";
    for (double t : r.config.t_list) {
        for (double x : r.config.x_list) {
            AsymptoticValue v;
            if (cond.satisfied) {
                v = r.config.k_max
                        ? theorem3b_series(datum, kernel, t, x, *r.config.k_max)
                        : theorem3b_auto(datum, kernel, t, x);
            } else {
                v = leading_term(datum, kernel, t, x);
            }
            OrderedJson p;
            p["t"] = t;
            p["x"] = x;
            p["value"] = v.value;
            p["regime"] = to_string(v.regime);
            if (v.regime == Regime::T3b_oscillatory) {
                p["k_used"] = v.k_used;
                p["tail_bound"] = v.tail_bound;
                p["poisson"] = poisson_approx(datum, cond.theta, kernel, t, x);
            }
            if (v.saddle) p["s_plus"] = v.saddle->s_plus;
            if (!v.warnings.empty()) p["warnings"] = v.warnings;
            points.push_back(std::move(p));
            csv << format_double(t) << "," << format_double(x) << ","
                << format_double(v.value) << "," << to_string(v.regime) << ","
                << v.k_used << "," << format_double(v.tail_bound) << "\n";
        }
    }

    if (r.config.format == "json")
        emit(r.config.out, dump(OrderedJson{{"points", points}}));
    else
        emit(r.config.out, csv.str());
    return 0;
}

// --- regions ------------------------------------------------------------------

int cmd_regions(const CommonArgs& args) {
    auto r = resolve(args);
    auto kernel = kernel_from_config(r.config, r.base_dir);
    auto datum = datum_from_config(r.config, r.base_dir);
    auto report = region_report(kernel, datum);

    OrderedJson j;
    j["p_bar"] = report.p_bar;
    j["q_bar"] = report.q_bar;
    if (report.s_bar_p0) j["s_bar_p0"] = *report.s_bar_p0;
    if (report.s_bar_q0) j["s_bar_q0"] = *report.s_bar_q0;
    j["s_left"] = report.s_left;
    j["s_right"] = report.s_right;
    j["slope_left"] = report.slope_left;
    j["slope_right"] = report.slope_right;

    // F/G curves on a uniform s-grid spanning the interesting window.
    const double lo = report.p_bar - 0.5 * (report.q_bar - report.p_bar);
    const double hi = report.q_bar + 0.5 * (report.q_bar - report.p_bar);
    const double start = std::max(lo, kernel.p1() + 1e-3 * (hi - kernel.p1()));
    std::vector<std::vector<double>> rows;
    const int n = 201;
    const bool finite_p0 = std::isfinite(datum.p0());
    const bool finite_q0 = std::isfinite(datum.q0());
    for (int i = 0; i < n; ++i) {
        const double s = start + (hi - start) * i / (n - 1);
        std::vector<double> row = {s, F_exponent(kernel, s)};
        row.push_back(finite_p0 ? G_exponent(kernel, datum.p0(), s) : 0.0);
        row.push_back(finite_q0 ? G_exponent(kernel, datum.q0(), s) : 0.0);
        rows.push_back(std::move(row));
    }

    if (r.config.format == "json") {
        OrderedJson curve = OrderedJson::array();
        for (const auto& row : rows)
            curve.push_back(
                {{"s", row[0]}, {"F", row[1]}, {"G_p0", row[2]}, {"G_q0", row[3]}});
        j["curve"] = std::move(curve);
        emit(r.config.out, dump(j));
    } else {
        std::cout << dump(j);
        emit(r.config.out, csv_table("s,F,G_p0,G_q0", rows));
    }
    return 0;
}

// --- compare -------------------------------------------------------------------

int cmd_compare(const CommonArgs& args) {
    auto r = resolve(args);
    auto kernel = kernel_from_config(r.config, r.base_dir);
    auto datum = datum_from_config(r.config, r.base_dir);
    require_tx(r.config);
    SimGridSpec g = r.config.grid.value_or(SimGridSpec{});
    const double t_max =
        *std::max_element(r.config.t_list.begin(), r.config.t_list.end());
    g.t_end = std::max(g.t_end, t_max);
    for (double x : r.config.x_list)
        if (!(x > 0.0))
            throw ValidationError("compare: x values must be positive");

    auto solution =
        simulate_log_grid(kernel, datum, g.y_min, g.y_max, g.dy, g.dt, g.t_end);

    auto rel_dev = [](double a, double b) {
        const double scale = std::max(std::fabs(a), std::fabs(b));
        return scale > 0.0 ? std::fabs(a - b) / scale : 0.0;
    };

    // Picard wants a dense log-spaced grid; reuse the simulation grid and
    // interpolate at the requested points.
    const std::size_t n_grid =
        static_cast<std::size_t>(std::floor((g.y_max - g.y_min) / g.dy)) + 1;
    std::vector<double> picard_x(n_grid);
    for (std::size_t i = 0; i < n_grid; ++i)
        picard_x[i] = std::exp(g.y_min + g.dy * static_cast<double>(i));

    std::vector<std::vector<double>> rows;
    for (double t : r.config.t_list) {
        const std::vector<double> picard_grid =
            picard_solve(kernel, datum, t, picard_x);
        std::vector<double> u_picard(r.config.x_list.size());
        for (std::size_t i = 0; i < r.config.x_list.size(); ++i)
            u_picard[i] = interp_cubic_uniform(picard_grid, g.y_min, g.dy,
                                               std::log(r.config.x_list[i]));
        const std::size_t snap = solution.snapshot_near(t);
        std::vector<double> u_mellin(r.config.x_list.size());
        parallel_for(r.config.x_list.size(), [&](std::size_t i) {
            u_mellin[i] = inverse_mellin_u(datum, kernel, t, r.config.x_list[i]);
        });
        for (std::size_t i = 0; i < r.config.x_list.size(); ++i) {
            const double x = r.config.x_list[i];
            const double u_grid = solution.evaluate(snap, x);
            const double u_asym = leading_term(datum, kernel, t, x).value;
            rows.push_back({t, x, u_grid, u_picard[i], u_mellin[i], u_asym,
                            rel_dev(u_grid, u_picard[i]),
                            rel_dev(u_grid, u_mellin[i]),
                            rel_dev(u_picard[i], u_mellin[i])});
        }
    }

    const std::string header =
        "t,x,u_grid,u_picard,u_mellin,u_asymptotic,"
        "dev_grid_picard,dev_grid_mellin,dev_picard_mellin";
    if (r.config.format == "json") {
        OrderedJson points = OrderedJson::array();
        for (const auto& row : rows) {
            points.push_back({{"t", row[0]},
                              {"x", row[1]},
                              {"u_grid", row[2]},
                              {"u_picard", row[3]},
                              {"u_mellin", row[4]},
                              {"u_asymptotic", row[5]},
                              {"dev_grid_picard", row[6]},
                              {"dev_grid_mellin", row[7]},
                              {"dev_picard_mellin", row[8]}});
        }
        emit(r.config.out, dump(OrderedJson{{"points", points}}));
    } else {
        emit(r.config.out, csv_table(header, rows));
    }
    return 0;
}

// --- profiles --------------------------------------------------------------------

int cmd_profiles(const CommonArgs& args) {
    auto r = resolve(args);
    auto kernel = kernel_from_config(r.config, r.base_dir);
    auto datum = datum_from_config(r.config, r.base_dir);
    SimGridSpec g = r.config.grid.value_or(SimGridSpec{});
    const double t = r.config.t_list.empty() ? g.t_end : r.config.t_list.front();
    g.t_end = std::max(g.t_end, t);

    auto solution =
        simulate_log_grid(kernel, datum, g.y_min, g.y_max, g.dy, g.dt, g.t_end);
    auto evaluator = [&](double tt, double xx) {
        return solution.evaluate(solution.snapshot_near(tt), xx);
    };
    auto profiles = rescaled_profiles(datum, kernel, evaluator, t);

    if (r.config.format == "json") {
        OrderedJson j;
        j["t"] = t;
        j["y0"] = profiles.y0;
        j["sigma2"] = profiles.sigma2;
        j["mass"] = datum.mass();
        j["r"] = {{"grid", profiles.r.grid},
                  {"values", profiles.r.values},
                  {"integral", profiles.r.integral},
                  {"mean", profiles.r.mean},
                  {"variance", profiles.r.variance}};
        j["r_tilde"] = {{"grid", profiles.r_tilde.grid},
                        {"values", profiles.r_tilde.values},
                        {"integral", profiles.r_tilde.integral},
                        {"mean", profiles.r_tilde.mean},
                        {"variance", profiles.r_tilde.variance}};
        emit(r.config.out, dump(j));
        return 0;
    }

    std::vector<std::vector<double>> r_rows, rt_rows;
    for (std::size_t i = 0; i < profiles.r.grid.size(); ++i)
        r_rows.push_back({profiles.r.grid[i], profiles.r.values[i]});
    for (std::size_t i = 0; i < profiles.r_tilde.grid.size(); ++i)
        rt_rows.push_back({profiles.r_tilde.grid[i], profiles.r_tilde.values[i]});
    if (r.config.out.empty()) {
        std::cout << csv_table("y,r", r_rows);
        std::cout << csv_table("z,r_tilde", rt_rows);
    } else {
        write_text_file(r.config.out, csv_table("y,r", r_rows));
        write_text_file(sibling_path(r.config.out, "_rtilde"),
                        csv_table("z,r_tilde", rt_rows));
    }
    return 0;
}

// --- growth-frag -----------------------------------------------------------------

int cmd_growth_frag(const CommonArgs& args) {
    auto r = resolve(args);
    auto kernel = kernel_from_config(r.config, r.base_dir);
    auto datum = datum_from_config(r.config, r.base_dir);
    require_tx(r.config);
    if (!r.config.c)
        throw ValidationError("growth-frag needs a growth rate: pass --c");
    const double c = *r.config.c;

    auto classification = classify_growth_frag(kernel, datum, c);
    auto evaluator = [&](double t, double x) {
        return inverse_mellin_u(datum, kernel, t, x);
    };

    const std::size_t count = r.config.t_list.size() * r.config.x_list.size();
    std::vector<std::vector<double>> rows(count);
    parallel_for(count, [&](std::size_t i) {
        const double t = r.config.t_list[i / r.config.x_list.size()];
        const double x = r.config.x_list[i % r.config.x_list.size()];
        rows[i] = {t, x, growth_frag_transform(evaluator, c, t, x)};
    });

    OrderedJson cls;
    cls["case"] = to_string(classification.kind);
    cls["max_ray_to_zero"] = classification.max_ray_to_zero;
    cls["threshold_p_bar"] = classification.threshold_p_bar;
    cls["threshold_q_bar"] = classification.threshold_q_bar;
    cls["minus_dK_one"] = classification.minus_dK_one;
    if (!classification.warnings.empty())
        cls["warnings"] = classification.warnings;

    if (r.config.format == "json") {
        OrderedJson points = OrderedJson::array();
        for (const auto& row : rows)
            points.push_back({{"t", row[0]}, {"x", row[1]}, {"v", row[2]}});
        OrderedJson j;
        j["c"] = c;
        j["classification"] = std::move(cls);
        j["points"] = std::move(points);
        emit(r.config.out, dump(j));
    } else {
        std::cout << dump(cls);
        emit(r.config.out, csv_table("t,x,v", rows));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fragasym: critical fragmentation equation toolkit"};
    app.require_subcommand(1);

    auto* kernel_cmd = app.add_subcommand("kernel", "kernel inspection");
    kernel_cmd->require_subcommand(1);
    std::string kernel_spec_path, kernel_out;
    auto* check_cmd = kernel_cmd->add_subcommand("check", "admissibility report");
    check_cmd->add_option("spec", kernel_spec_path, "kernel spec (JSON)")
        ->required();
    check_cmd->add_option("--out", kernel_out, "output path");
    auto* cond_cmd =
        kernel_cmd->add_subcommand("condition-h", "atom commensurability");
    cond_cmd->add_option("spec", kernel_spec_path, "kernel spec (JSON)")
        ->required();
    cond_cmd->add_option("--out", kernel_out, "output path");

    CommonArgs sim_args, mellin_args, asym_args, regions_args, compare_args,
        profiles_args, growth_args;
    auto* sim_cmd = app.add_subcommand("simulate", "log-grid RK4 simulation");
    add_common_flags(sim_cmd, sim_args, true);
    auto* mellin_cmd =
        app.add_subcommand("solve-mellin", "inverse-Mellin evaluation");
    add_common_flags(mellin_cmd, mellin_args, false);
    auto* asym_cmd =
        app.add_subcommand("asymptote", "long-time asymptotic formulas");
    add_common_flags(asym_cmd, asym_args, false);
    auto* regions_cmd =
        app.add_subcommand("regions", "growth/decay region report");
    add_common_flags(regions_cmd, regions_args, false);
    auto* compare_cmd =
        app.add_subcommand("compare", "cross-validation of all solvers");
    add_common_flags(compare_cmd, compare_args, true);
    auto* profiles_cmd =
        app.add_subcommand("profiles", "rescaled profiles r and r-tilde");
    add_common_flags(profiles_cmd, profiles_args, true);
    auto* growth_cmd =
        app.add_subcommand("growth-frag", "growth-fragmentation transform");
    add_common_flags(growth_cmd, growth_args, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (check_cmd->parsed()) return cmd_kernel_check(kernel_spec_path, kernel_out);
        if (cond_cmd->parsed()) return cmd_condition_h(kernel_spec_path, kernel_out);
        if (sim_cmd->parsed()) return cmd_simulate(sim_args);
        if (mellin_cmd->parsed()) return cmd_solve_mellin(mellin_args);
        if (asym_cmd->parsed()) return cmd_asymptote(asym_args);
        if (regions_cmd->parsed()) return cmd_regions(regions_args);
        if (compare_cmd->parsed()) return cmd_compare(compare_args);
        if (profiles_cmd->parsed()) return cmd_profiles(profiles_args);
        if (growth_cmd->parsed()) return cmd_growth_frag(growth_args);
    } catch (const fragasym::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
