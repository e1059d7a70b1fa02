#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "shiner/density.hpp"
#include "shiner/engine.hpp"
#include "shiner/swarm_core.hpp"

namespace py = pybind11;
using namespace shiner;

PYBIND11_MODULE(_shiner, m) {
  m.doc() = "Speed-modulated, socially steered swarm walk and its 1D density propagator.";

  py::enum_<Mode>(m, "Mode")
      .value("none", Mode::kNone)
      .value("env", Mode::kEnv)
      .value("social", Mode::kSocial)
      .value("both", Mode::kBoth);

  py::class_<Box>(m, "Box")
      .def(py::init<double, double, double, double>(), py::arg("min_x") = -0.5,
           py::arg("min_y") = -0.5, py::arg("max_x") = 0.5, py::arg("max_y") = 0.5)
      .def_readwrite("min_x", &Box::min_x)
      .def_readwrite("min_y", &Box::min_y)
      .def_readwrite("max_x", &Box::max_x)
      .def_readwrite("max_y", &Box::max_y);

  py::class_<SwarmParams>(m, "SwarmParams")
      .def(py::init<>())
      .def_readwrite("n_nodes", &SwarmParams::n_nodes)
      .def_readwrite("c1", &SwarmParams::c1)
      .def_readwrite("c2", &SwarmParams::c2)
      .def_readwrite("r", &SwarmParams::r)
      .def_readwrite("w", &SwarmParams::w)
      .def_readwrite("s", &SwarmParams::s)
      .def_readwrite("rho", &SwarmParams::rho)
      .def_readwrite("env_enabled", &SwarmParams::env_enabled)
      .def_readwrite("social_enabled", &SwarmParams::social_enabled)
      .def_readwrite("sigma_const", &SwarmParams::sigma_const)
      .def_property("mode", &SwarmParams::mode, &SwarmParams::set_mode)
      .def("validate", &SwarmParams::validate);

  py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
  py::register_exception<density::GridError>(m, "GridError", PyExc_ValueError);

  m.def("hammer", &hammer, py::arg("z"), py::arg("s"));
  m.def("env_speed", &env_speed, py::arg("p"), py::arg("params"));
  m.def("step_displacement", &step_displacement, py::arg("sigma"), py::arg("v"), py::arg("u_raw"));
  m.def(
      "build_neighborhood",
      [](const std::vector<Position>& positions, double r) {
        return build_neighborhood(positions, r).adjacency;
      },
      py::arg("positions"), py::arg("r"));
  m.def(
      "social_direction",
      [](std::size_t i, const std::vector<Position>& positions, const SwarmParams& params,
         std::complex<double> z) {
        if (i >= positions.size()) throw py::index_error("node index out of range");
        return social_direction(i, positions, build_neighborhood(positions, params.r), params, z);
      },
      py::arg("i"), py::arg("positions"), py::arg("params"), py::arg("z"));

  py::class_<Metrics>(m, "Metrics")
      .def_readonly("t", &Metrics::t)
      .def_readonly("mean_dist_to_rho", &Metrics::mean_dist_to_rho)
      .def_readonly("frac_within_eps", &Metrics::frac_within_eps)
      .def_readonly("mean_pairwise_dist", &Metrics::mean_pairwise_dist)
      .def_readonly("cluster_count", &Metrics::cluster_count);

  m.def(
      "simulate",
      [](const SwarmParams& params, std::uint64_t seed, std::size_t n_steps, std::size_t stride,
         double eps, const Box& region, unsigned threads) {
        RunOptions options{seed, region, n_steps, stride, eps, threads};
        std::vector<std::pair<std::vector<Position>, Metrics>> out;
        {
          py::gil_scoped_release release;
          for (auto& snap : run(params, options)) out.emplace_back(std::move(snap.state.positions), snap.metrics);
        }
        return out;
      },
      py::arg("params"), py::arg("seed") = 1, py::arg("n_steps") = 70, py::arg("stride") = 35,
      py::arg("eps") = 0.15, py::arg("region") = Box{}, py::arg("threads") = 1,
      "Run the swarm; returns [(positions, metrics)] at each recorded step.");

  m.def("kernel_pdf",
        [](double mu, double z, double c1, double c2) {
          return density::kernel_pdf(mu, z, {c1, c2});
        },
        py::arg("mu"), py::arg("z"), py::arg("c1") = 1.0, py::arg("c2") = 0.1);

  m.def(
      "pdf_at_time",
      [](double x0, int t, double c1, double c2, double z_min, double z_max, std::size_t n_points,
         unsigned threads) {
        density::GridPdf f;
        {
          py::gil_scoped_release release;
          f = density::pdf_at_time(x0, t, {z_min, z_max, n_points}, {c1, c2}, threads);
        }
        std::vector<double> z(f.values.size());
        for (std::size_t k = 0; k < z.size(); ++k) z[k] = f.z(k);
        return py::make_tuple(z, f.values);
      },
      py::arg("x0"), py::arg("t"), py::arg("c1") = 1.0, py::arg("c2") = 0.1,
      py::arg("z_min") = -60.0, py::arg("z_max") = 60.0, py::arg("n_points") = 6001,
      py::arg("threads") = 1, "Returns (z, pdf) lists for the location density at step t.");

  m.def(
      "grid_stats",
      [](double x0, int t, double c1, double c2, double z_min, double z_max, std::size_t n_points,
         double eps) {
        const auto f = density::pdf_at_time(x0, t, {z_min, z_max, n_points}, {c1, c2});
        const auto stats = density::grid_stats(f);
        return py::make_tuple(stats.mass, stats.mean, density::mass_near(f, eps));
      },
      py::arg("x0"), py::arg("t"), py::arg("c1") = 1.0, py::arg("c2") = 0.1,
      py::arg("z_min") = -60.0, py::arg("z_max") = 60.0, py::arg("n_points") = 6001,
      py::arg("eps") = 1.0, "Returns (mass, mean, mass_near(eps)).");

  m.def(
      "mc_sample",
      [](double x0, int t, std::size_t n_paths, double c1, double c2, std::uint64_t seed) {
        NormalStream stream(seed, 0);
        return density::mc_sample(x0, t, n_paths, {c1, c2}, stream);
      },
      py::arg("x0"), py::arg("t"), py::arg("n_paths"), py::arg("c1") = 1.0, py::arg("c2") = 0.1,
      py::arg("seed") = 1);
}
