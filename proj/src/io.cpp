#include "fragasym/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fragasym/errors.hpp"

namespace fragasym {

namespace {
double require_number(const OrderedJson& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ValidationError("missing numeric field '" + key + "'");
    return j[key].get<double>();
}

std::vector<double> number_list(const OrderedJson& j) {
    std::vector<double> out;
    for (const auto& v : j) out.push_back(v.get<double>());
    return out;
}
}  // namespace

FragmentationKernel parse_kernel_spec(const OrderedJson& j) {
    if (!j.contains("form") || !j["form"].is_string())
        throw ValidationError("kernel spec: missing 'form'");
    const std::string form = j["form"].get<std::string>();
    if (form == "homogeneous") return FragmentationKernel::homogeneous();
    if (form == "power") {
        if (!j.contains("params"))
            throw ValidationError("kernel spec: power form needs params.a");
        return FragmentationKernel::power(require_number(j["params"], "a"));
    }
    if (form == "mitosis") return FragmentationKernel::mitosis();
    if (form == "atoms") {
        if (!j.contains("atoms") || !j["atoms"].is_array())
            throw ValidationError("kernel spec: atoms form needs 'atoms' array");
        std::vector<KernelAtom> atoms;
        for (const auto& pair : j["atoms"]) {
            if (!pair.is_array() || pair.size() != 2)
                throw ValidationError("kernel spec: atom entries are [sigma, weight]");
            atoms.push_back({pair[0].get<double>(), pair[1].get<double>()});
        }
        return FragmentationKernel::atoms(std::move(atoms));
    }
    if (form == "tabulated") {
        if (!j.contains("grid"))
            throw ValidationError("kernel spec: tabulated form needs 'grid'");
        const auto& g = j["grid"];
        if (!g.contains("z") || !g.contains("values"))
            throw ValidationError("kernel spec: grid needs 'z' and 'values'");
        const double tol = j.contains("norm_tolerance")
                               ? j["norm_tolerance"].get<double>()
                               : 1e-6;
        return FragmentationKernel::tabulated(number_list(g["z"]),
                                              number_list(g["values"]), tol);
    }
    throw ValidationError("kernel spec: unknown form '" + form + "'");
}

OrderedJson kernel_to_json(const FragmentationKernel& kernel) {
    OrderedJson j;
    switch (kernel.form()) {
        case KernelForm::Homogeneous:
            j["form"] = "homogeneous";
            break;
        case KernelForm::Power:
            j["form"] = "power";
            j["params"] = {{"a", kernel.power_exponent()}};
            break;
        case KernelForm::Mitosis:
            j["form"] = "mitosis";
            break;
        case KernelForm::Atoms: {
            j["form"] = "atoms";
            OrderedJson atoms = OrderedJson::array();
            for (const auto& a : kernel.atom_list())
                atoms.push_back({a.sigma, a.weight});
            j["atoms"] = std::move(atoms);
            break;
        }
        case KernelForm::Tabulated:
        case KernelForm::Mixture: {
            j["form"] = "tabulated";
            j["grid"] = {{"z", kernel.density().grid},
                         {"values", kernel.density().values}};
            j["norm_tolerance"] = kernel.norm_tolerance();
            break;
        }
    }
    return j;
}

InitialDatum parse_datum_spec(const OrderedJson& j) {
    if (!j.contains("form") || !j["form"].is_string())
        throw ValidationError("datum spec: missing 'form'");
    const std::string form = j["form"].get<std::string>();
    const OrderedJson params =
        j.contains("params") ? j["params"] : OrderedJson::object();

    InitialDatum d = [&]() {
        if (form == "log_gaussian") {
            const double y0 = require_number(params, "y0");
            const double width =
                params.contains("width") ? params["width"].get<double>() : 1.0;
            return InitialDatum::log_gaussian(y0, width);
        }
        if (form == "two_sided_power")
            return InitialDatum::two_sided_power(require_number(params, "p0"),
                                                 require_number(params, "q0"));
        if (form == "indicator") return InitialDatum::indicator();
        if (form == "compact_bump")
            return InitialDatum::compact_bump(require_number(params, "x_lo"),
                                              require_number(params, "x_hi"));
        if (form == "power_tail")
            return InitialDatum::power_tail(require_number(params, "a0"),
                                            require_number(params, "q0"));
        if (form == "tabulated") {
            if (!params.contains("x") || !params.contains("values"))
                throw ValidationError("datum spec: tabulated needs x/values");
            const double p0 = params.contains("p0")
                                  ? params["p0"].get<double>()
                                  : -std::numeric_limits<double>::infinity();
            const double q0 = params.contains("q0")
                                  ? params["q0"].get<double>()
                                  : std::numeric_limits<double>::infinity();
            return InitialDatum::tabulated(number_list(params["x"]),
                                           number_list(params["values"]), p0, q0);
        }
        throw ValidationError("datum spec: unknown form '" + form + "'");
    }();

    if (j.contains("tails")) {
        const auto& tails = j["tails"];
        if (tails.contains("upper")) {
            const auto& u = tails["upper"];
            UpperTail tail;
            tail.a0 = require_number(u, "a0");
            tail.q0 = require_number(u, "q0");
            tail.r = u.contains("r")
                         ? u["r"].get<double>()
                         : std::numeric_limits<double>::infinity();
            d.declare_upper_tail(tail);
        }
        if (tails.contains("lower")) {
            const auto& l = tails["lower"];
            LowerTail tail;
            tail.b0 = require_number(l, "b0");
            tail.p0 = require_number(l, "p0");
            tail.rho = l.contains("rho")
                           ? l["rho"].get<double>()
                           : -std::numeric_limits<double>::infinity();
            d.declare_lower_tail(tail);
        }
    }
    return d;
}

OrderedJson datum_to_json(const InitialDatum& datum) {
    OrderedJson j;
    j["form"] = to_string(datum.form());
    switch (datum.form()) {
        case DatumForm::LogGaussian:
            j["params"] = {{"y0", datum.params()[0]}, {"width", datum.params()[1]}};
            break;
        case DatumForm::TwoSidedPower:
            j["params"] = {{"p0", datum.params()[0]}, {"q0", datum.params()[1]}};
            break;
        case DatumForm::Indicator:
            break;
        case DatumForm::CompactBump:
            j["params"] = {{"x_lo", datum.params()[0]},
                           {"x_hi", datum.params()[1]}};
            break;
        case DatumForm::Tabulated:
            j["params"] = {{"x", datum.tab_grid()},
                           {"values", datum.tab_values()},
                           {"p0", datum.params()[0]},
                           {"q0", datum.params()[1]}};
            break;
        case DatumForm::PowerTail:
            j["form"] = "power_tail";
            j["params"] = {{"a0", datum.params()[0]}, {"q0", datum.params()[1]}};
            break;
    }
    return j;
}

ExperimentConfig parse_config(const OrderedJson& j) {
    ExperimentConfig config;
    if (j.contains("kernel")) config.kernel_spec = j["kernel"];
    if (j.contains("datum")) config.datum_spec = j["datum"];
    if (j.contains("t")) config.t_list = number_list(j["t"]);
    if (j.contains("x")) config.x_list = number_list(j["x"]);
    if (j.contains("c")) config.c = j["c"].get<double>();
    if (j.contains("kmax")) config.k_max = j["kmax"].get<int>();
    if (j.contains("grid")) {
        SimGridSpec g;
        const auto& gj = j["grid"];
        if (gj.contains("ymin")) g.y_min = gj["ymin"].get<double>();
        if (gj.contains("ymax")) g.y_max = gj["ymax"].get<double>();
        if (gj.contains("dy")) g.dy = gj["dy"].get<double>();
        if (gj.contains("dt")) g.dt = gj["dt"].get<double>();
        if (gj.contains("tend")) g.t_end = gj["tend"].get<double>();
        config.grid = g;
    }
    if (j.contains("out")) config.out = j["out"].get<std::string>();
    if (j.contains("format")) config.format = j["format"].get<std::string>();
    if (config.format != "csv" && config.format != "json")
        throw ValidationError("config: format must be 'csv' or 'json'");
    return config;
}

OrderedJson config_to_json(const ExperimentConfig& config) {
    OrderedJson j;
    if (!config.kernel_spec.is_null()) j["kernel"] = config.kernel_spec;
    if (!config.datum_spec.is_null()) j["datum"] = config.datum_spec;
    if (!config.t_list.empty()) j["t"] = config.t_list;
    if (!config.x_list.empty()) j["x"] = config.x_list;
    if (config.c) j["c"] = *config.c;
    if (config.k_max) j["kmax"] = *config.k_max;
    if (config.grid) {
        j["grid"] = {{"ymin", config.grid->y_min},
                     {"ymax", config.grid->y_max},
                     {"dy", config.grid->dy},
                     {"dt", config.grid->dt},
                     {"tend", config.grid->t_end}};
    }
    if (!config.out.empty()) j["out"] = config.out;
    j["format"] = config.format;
    return j;
}

OrderedJson load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    OrderedJson j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

namespace {
OrderedJson resolve_spec(const OrderedJson& spec, const std::string& base_dir,
                         const std::string& what) {
    if (spec.is_null())
        throw ValidationError("config: missing " + what + " spec");
    if (spec.is_object() && spec.contains("file")) {
        std::filesystem::path p(spec["file"].get<std::string>());
        if (p.is_relative() && !base_dir.empty())
            p = std::filesystem::path(base_dir) / p;
        if (!std::filesystem::exists(p))
            throw ValidationError("config: " + what + " file not found: " +
                                  p.string());
        return load_json_file(p.string());
    }
    return spec;
}
}  // namespace

FragmentationKernel kernel_from_config(const ExperimentConfig& config,
                                       const std::string& base_dir) {
    return parse_kernel_spec(resolve_spec(config.kernel_spec, base_dir, "kernel"));
}

InitialDatum datum_from_config(const ExperimentConfig& config,
                               const std::string& base_dir) {
    return parse_datum_spec(resolve_spec(config.datum_spec, base_dir, "datum"));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
}

std::string csv_table(const std::string& header,
                      const std::vector<std::vector<double>>& rows) {
    std::ostringstream os;
    os << header << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << format_double(row[i]);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace fragasym
