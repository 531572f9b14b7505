#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "salpeter/delta_check.hpp"
#include "salpeter/fourier.hpp"
#include "salpeter/observables.hpp"
#include "salpeter/propagate.hpp"
#include "salpeter/runner.hpp"
#include "salpeter/version.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace salpeter;

PYBIND11_MODULE(_core, m) {
    m.doc() = "1D Salpeter-equation wavepacket scattering and tunneling solver";
    m.attr("__version__") = kVersion;

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<Units>(m, "Units")
        .def(py::init([](double mass, double hbar, double c) {
                 Units u{hbar, c, mass};
                 validate_units(u);
                 return u;
             }),
             "mass"_a = 1.0, "hbar"_a = 1.0, "c"_a = 1.0)
        .def_readonly("mass", &Units::mass)
        .def_readonly("hbar", &Units::hbar)
        .def_readonly("c", &Units::c)
        .def("__repr__", [](const Units& u) {
            return "Units(mass=" + std::to_string(u.mass) + ")";
        });

    py::class_<Grid>(m, "Grid")
        .def_readonly("x_min", &Grid::x_min)
        .def_readonly("x_max", &Grid::x_max)
        .def_readonly("n", &Grid::n)
        .def_readonly("dx", &Grid::dx)
        .def_readonly("dp", &Grid::dp)
        .def_readonly("x_nodes", &Grid::x_nodes)
        .def_readonly("p_nodes", &Grid::p_nodes)
        .def("__eq__", [](const Grid& a, const Grid& b) { return a == b; })
        .def("__repr__", [](const Grid& g) {
            return "Grid(x_min=" + std::to_string(g.x_min) + ", x_max=" +
                   std::to_string(g.x_max) + ", n=" + std::to_string(g.n) + ")";
        });
    m.def("make_grid", &make_grid, "x_min"_a, "x_max"_a, "n_points"_a);

    py::enum_<Rep>(m, "Rep")
        .value("position", Rep::Position)
        .value("momentum", Rep::Momentum);

    py::class_<Wavepacket>(m, "Wavepacket")
        .def(py::init([](Eigen::VectorXcd amps, Rep rep, double time, Grid grid) {
                 return Wavepacket{std::move(amps), rep, time, std::move(grid)};
             }),
             "amps"_a, "rep"_a, "time"_a, "grid"_a)
        .def_readonly("amps", &Wavepacket::amps)
        .def_readonly("rep", &Wavepacket::rep)
        .def_readonly("time", &Wavepacket::time)
        .def_readonly("grid", &Wavepacket::grid)
        .def("norm", &Wavepacket::norm)
        .def("density", &Wavepacket::density);

    py::class_<PacketSpec>(m, "PacketSpec")
        .def(py::init([](double x0, double p0, double delta_x) {
                 return PacketSpec{x0, p0, delta_x};
             }),
             "x0"_a, "p0"_a, "delta_x"_a)
        .def_readonly("x0", &PacketSpec::x0)
        .def_readonly("p0", &PacketSpec::p0)
        .def_readonly("delta_x", &PacketSpec::delta_x);
    m.def("support_edges", &support_edges, "spec"_a);
    m.def("cos8_packet", &cos8_packet, "spec"_a, "grid"_a);
    m.def("normalized", &normalized, "psi"_a);
    m.def("mean_position", &mean_position, "psi"_a);
    m.def("mean_momentum", &mean_momentum, "psi"_a);

    m.def("to_momentum", &to_momentum, "psi"_a, "grid"_a);
    m.def("to_position", &to_position, "psi"_a, "grid"_a);

    py::class_<Potential>(m, "Potential")
        .def_static("rectangular", &Potential::rectangular, "v0"_a, "length"_a)
        .def_static("smooth_tanh", &Potential::smooth_tanh, "v0"_a, "length"_a, "alpha"_a)
        .def_static("narrow_delta", &Potential::narrow_delta, "strength"_a)
        .def("__repr__", [](const Potential& v) { return describe(v); });
    m.def("eval_position", &eval_position, "potential"_a, "x"_a);
    m.def("momentum_element", &momentum_element, "potential"_a, "q"_a);
    m.def("transmitted_cut", &transmitted_cut, "potential"_a);

    m.def("dispersion", &dispersion, "p"_a, "units"_a);

    py::class_<HamiltonianMatrix>(m, "HamiltonianMatrix")
        .def_readonly("m", &HamiltonianMatrix::m)
        .def_readonly("grid", &HamiltonianMatrix::grid);
    py::class_<EigenBasis>(m, "EigenBasis")
        .def_readonly("eps", &EigenBasis::eps)
        .def_readonly("vecs", &EigenBasis::vecs)
        .def_readonly("grid", &EigenBasis::grid);
    m.def("build_hamiltonian", &build_hamiltonian, "grid"_a, "potential"_a, "units"_a);
    m.def("diagonalize", &diagonalize, "hamiltonian"_a);
    m.def("delta_limit_eigenfunction", &delta_limit_eigenfunction, "eps_n"_a, "grid"_a,
          "units"_a);
    m.def(
        "load_or_diagonalize",
        [](const Grid& g, const Potential& v, const Units& u, const std::string& cache_dir) {
            return load_or_diagonalize(g, v, u, cache_dir);
        },
        "grid"_a, "potential"_a, "units"_a, "cache_dir"_a = std::string());

    m.def("spectral_propagate", &spectral_propagate, "basis"_a, "psi0"_a, "t"_a);
    m.def("free_propagate", &free_propagate, "grid"_a, "psi0"_a, "t"_a, "units"_a);

    py::class_<Evolution>(m, "Evolution")
        .def(py::init<EigenBasis, const Wavepacket&>(), "basis"_a, "psi0_momentum"_a)
        .def(py::init<const Grid&, const Units&, const Wavepacket&>(), "grid"_a, "units"_a,
             "psi0_momentum"_a)
        .def("at", &Evolution::at, "t"_a)
        .def("at_position", &Evolution::at_position, "t"_a)
        .def_property_readonly("is_free", &Evolution::is_free);
    m.def("evolve_series", &evolve_series, "evolution"_a, "times"_a);

    py::class_<RegionProbability>(m, "RegionProbability")
        .def_readonly("lower", &RegionProbability::lower)
        .def_readonly("upper", &RegionProbability::upper)
        .def_readonly("mass", &RegionProbability::mass)
        .def_readonly("clipped", &RegionProbability::clipped);
    py::class_<OlcRecord>(m, "OlcRecord")
        .def_readonly("t", &OlcRecord::t)
        .def_readonly("light_cone_pos", &OlcRecord::light_cone_pos)
        .def_readonly("fraction", &OlcRecord::fraction)
        .def_readonly("out_of_window", &OlcRecord::out_of_window);
    py::enum_<OlcDenominator>(m, "OlcDenominator")
        .value("total", OlcDenominator::Total)
        .value("transmitted", OlcDenominator::Transmitted);

    m.def("region_mass", &region_mass, "psi"_a, "a"_a, "b"_a);
    m.def("olc_fraction", &olc_fraction, "psi"_a, "right_edge"_a, "t"_a, "units"_a,
          "denominator"_a = OlcDenominator::Total, "x_cut"_a = 0.0);
    m.def("olc_series", &olc_series, "evolution"_a, "right_edge"_a, "times"_a,
          "denominator"_a = OlcDenominator::Total, "x_cut"_a = 0.0);
    m.def("olc_global_max", &olc_global_max, "series"_a);
    m.def("conditional_mean_position", &conditional_mean_position, "psi"_a, "x_cut"_a);
    m.def("peak_position", &peak_position, "psi"_a, "x_cut"_a);

    py::class_<DeltaComparison>(m, "DeltaComparison")
        .def_readonly("eps_n", &DeltaComparison::eps_n)
        .def_readonly("rel_l2_error", &DeltaComparison::rel_l2_error)
        .def_readonly("scale", &DeltaComparison::scale);
    m.def("compare_to_delta_limit", &compare_to_delta_limit, "basis"_a, "n"_a, "grid"_a,
          "units"_a);

    m.def(
        "run_scenario",
        [](const std::string& path, const std::string& subcommand, const std::string& out_dir,
           int threads, bool use_cache) {
            const Scenario scenario = load_scenario(path);
            RunOptions opt;
            opt.out_dir = out_dir;
            opt.threads = threads;
            opt.use_cache = use_cache;
            opt.quiet = true;
            const RunResult r = run(scenario, subcommand, opt);
            py::dict d;
            d["csv"] = r.csv_path.string();
            d["manifest"] = r.manifest_path.string();
            d["cache_hits"] = r.cache_hits;
            d["cache_misses"] = r.cache_misses;
            d["warnings"] = r.warnings;
            return d;
        },
        "scenario_path"_a, "subcommand"_a, "out_dir"_a, "threads"_a = 0, "use_cache"_a = true);
}
