#ifndef FRAGASYM_IO_HPP
#define FRAGASYM_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fragasym/datum.hpp"
#include "fragasym/kernel.hpp"

namespace fragasym {

using OrderedJson = nlohmann::ordered_json;

// Kernel spec: {"form": "homogeneous"|"power"|"mitosis"|"atoms"|"tabulated",
//               "params": {...}, "atoms": [[sigma, weight], ...],
//               "grid": {"z": [...], "values": [...]}}
FragmentationKernel parse_kernel_spec(const OrderedJson& j);
OrderedJson kernel_to_json(const FragmentationKernel& kernel);

// Datum spec: {"form": "log_gaussian"|"two_sided_power"|"indicator"|
//              "compact_bump"|"tabulated", "params": {...}, "tails": {...}}
InitialDatum parse_datum_spec(const OrderedJson& j);
OrderedJson datum_to_json(const InitialDatum& datum);

struct SimGridSpec {
    double y_min = -60.0;
    double y_max = 5.0;
    double dy = 0.0433216987849966;  // log(2)/16
    double dt = 0.0108304246962491;  // dy/4
    double t_end = 20.0;
};

struct ExperimentConfig {
    OrderedJson kernel_spec;  // inline object or {"file": "..."}
    OrderedJson datum_spec;
    std::vector<double> t_list;
    std::vector<double> x_list;
    std::optional<double> c;
    std::optional<int> k_max;
    std::optional<SimGridSpec> grid;
    std::string out;
    std::string format = "csv";
};

ExperimentConfig parse_config(const OrderedJson& j);
OrderedJson config_to_json(const ExperimentConfig& config);

// Resolves {"file": path} indirection relative to base_dir; throws
// ValidationError when a referenced file is missing.
FragmentationKernel kernel_from_config(const ExperimentConfig& config,
                                       const std::string& base_dir);
InitialDatum datum_from_config(const ExperimentConfig& config,
                               const std::string& base_dir);

OrderedJson load_json_file(const std::string& path);

// Deterministic shortest-round-trip formatting used by every CSV/JSON writer.
std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);

std::string csv_table(const std::string& header,
                      const std::vector<std::vector<double>>& rows);

}  // namespace fragasym

#endif
