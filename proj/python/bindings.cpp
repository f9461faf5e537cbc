#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fragasym/asymptotics.hpp"
#include "fragasym/datum.hpp"
#include "fragasym/inversion.hpp"
#include "fragasym/kernel.hpp"
#include "fragasym/regions.hpp"
#include "fragasym/simulator.hpp"

namespace py = pybind11;
using namespace fragasym;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Critical fragmentation equation: solvers and asymptotics";

    py::class_<KernelAtom>(m, "KernelAtom")
        .def(py::init<double, double>())
        .def_readwrite("sigma", &KernelAtom::sigma)
        .def_readwrite("weight", &KernelAtom::weight);

    py::class_<FragmentationKernel>(m, "FragmentationKernel")
        .def_static("homogeneous", &FragmentationKernel::homogeneous)
        .def_static("power", &FragmentationKernel::power, py::arg("a"))
        .def_static("mitosis", &FragmentationKernel::mitosis)
        .def_static("atoms",
                    [](const std::vector<std::pair<double, double>>& pairs) {
                        std::vector<KernelAtom> atoms;
                        for (const auto& [sigma, weight] : pairs)
                            atoms.push_back({sigma, weight});
                        return FragmentationKernel::atoms(std::move(atoms));
                    },
                    py::arg("atoms"))
        .def_static("tabulated", &FragmentationKernel::tabulated,
                    py::arg("grid"), py::arg("values"),
                    py::arg("norm_tolerance") = 1e-6)
        .def("p1", &FragmentationKernel::p1)
        .def("mellin", &FragmentationKernel::mellin, py::arg("s"))
        .def("mellin_derivative", &FragmentationKernel::mellin_derivative,
             py::arg("s"), py::arg("order"))
        .def("K", &FragmentationKernel::K, py::arg("s"))
        .def("dK", &FragmentationKernel::dK, py::arg("s"))
        .def("d2K", &FragmentationKernel::d2K, py::arg("s"))
        .def("cumulative_first_moment",
             &FragmentationKernel::cumulative_first_moment, py::arg("x"));

    m.def("is_admissible", [](const FragmentationKernel& kernel) {
        return check_admissible(kernel).pass;
    });

    py::class_<ConditionHResult>(m, "ConditionHResult")
        .def_readonly("satisfied", &ConditionHResult::satisfied)
        .def_readonly("theta", &ConditionHResult::theta)
        .def_readonly("exponents", &ConditionHResult::exponents)
        .def_readonly("v_star", &ConditionHResult::v_star)
        .def_readonly("certificate", &ConditionHResult::certificate);

    m.def("condition_h",
          [](const std::vector<std::pair<double, double>>& pairs) {
              std::vector<KernelAtom> atoms;
              for (const auto& [sigma, weight] : pairs)
                  atoms.push_back({sigma, weight});
              return condition_h(atoms);
          },
          py::arg("atoms"));

    py::class_<InitialDatum>(m, "InitialDatum")
        .def_static("log_gaussian", &InitialDatum::log_gaussian,
                    py::arg("y_center"), py::arg("width") = 1.0)
        .def_static("two_sided_power", &InitialDatum::two_sided_power,
                    py::arg("p0"), py::arg("q0"))
        .def_static("indicator", &InitialDatum::indicator)
        .def_static("compact_bump", &InitialDatum::compact_bump,
                    py::arg("x_lo"), py::arg("x_hi"))
        .def("__call__", &InitialDatum::evaluate, py::arg("x"))
        .def("p0", &InitialDatum::p0)
        .def("q0", &InitialDatum::q0)
        .def("mass", &InitialDatum::mass)
        .def("mellin", &InitialDatum::mellin, py::arg("s"));

    py::class_<SaddleData>(m, "SaddleData")
        .def_readonly("s_plus", &SaddleData::s_plus)
        .def_readonly("phi_at_saddle", &SaddleData::phi_at_saddle)
        .def_readonly("K2_at_saddle", &SaddleData::K2_at_saddle);

    m.def("saddle_point", &saddle_point, py::arg("kernel"), py::arg("t"),
          py::arg("x"));

    py::class_<AsymptoticValue>(m, "AsymptoticValue")
        .def_readonly("value", &AsymptoticValue::value)
        .def_property_readonly(
            "regime",
            [](const AsymptoticValue& v) { return to_string(v.regime); })
        .def_readonly("k_used", &AsymptoticValue::k_used)
        .def_readonly("tail_bound", &AsymptoticValue::tail_bound)
        .def_readonly("warnings", &AsymptoticValue::warnings);

    m.def("leading_term", &leading_term, py::arg("datum"), py::arg("kernel"),
          py::arg("t"), py::arg("x"));
    m.def("theorem3b_series", &theorem3b_series, py::arg("datum"),
          py::arg("kernel"), py::arg("t"), py::arg("x"), py::arg("k_max"));
    m.def("poisson_approx", &poisson_approx, py::arg("datum"), py::arg("theta"),
          py::arg("kernel"), py::arg("t"), py::arg("x"));

    m.def("inverse_mellin_u",
          [](const InitialDatum& datum, const FragmentationKernel& kernel,
             double t, double x) { return inverse_mellin_u(datum, kernel, t, x); },
          py::arg("datum"), py::arg("kernel"), py::arg("t"), py::arg("x"));

    py::class_<RegionReport>(m, "RegionReport")
        .def_readonly("p_bar", &RegionReport::p_bar)
        .def_readonly("q_bar", &RegionReport::q_bar)
        .def_readonly("s_left", &RegionReport::s_left)
        .def_readonly("s_right", &RegionReport::s_right)
        .def_readonly("slope_left", &RegionReport::slope_left)
        .def_readonly("slope_right", &RegionReport::slope_right);

    m.def("region_report", &region_report, py::arg("kernel"), py::arg("datum"));
    m.def("F_exponent", &F_exponent, py::arg("kernel"), py::arg("s"));
    m.def("G_exponent", &G_exponent, py::arg("kernel"), py::arg("p"),
          py::arg("s"));

    py::class_<LogGridSolution>(m, "LogGridSolution")
        .def_readonly("y_min", &LogGridSolution::y_min)
        .def_readonly("dy", &LogGridSolution::dy)
        .def_readonly("warnings", &LogGridSolution::warnings)
        .def("evaluate", &LogGridSolution::evaluate, py::arg("snapshot_index"),
             py::arg("x"))
        .def("snapshot_near", &LogGridSolution::snapshot_near, py::arg("t"))
        .def("mass_series", [](const LogGridSolution& s) {
            std::vector<std::tuple<double, double, double>> out;
            for (const auto& m : s.mass_series)
                out.emplace_back(m.t, m.mass, m.leak);
            return out;
        });

    m.def("simulate_log_grid", &simulate_log_grid, py::arg("kernel"),
          py::arg("datum"), py::arg("y_min"), py::arg("y_max"), py::arg("dy"),
          py::arg("dt"), py::arg("t_end"), py::arg("snapshot_stride") = 0);

    m.def("picard_solve", &picard_solve, py::arg("kernel"), py::arg("datum"),
          py::arg("t"), py::arg("x_grid"));
}
