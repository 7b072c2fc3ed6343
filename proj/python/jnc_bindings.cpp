#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jnc/analysis.hpp"
#include "jnc/centrality.hpp"
#include "jnc/error.hpp"
#include "jnc/export.hpp"
#include "jnc/generators.hpp"
#include "jnc/graph.hpp"
#include "jnc/layers.hpp"
#include "jnc/spectral.hpp"

namespace py = pybind11;

namespace {

// JSON documents cross the boundary as text and are decoded by the json module.
py::object to_python(const nlohmann::json& doc) {
  return py::module_::import("json").attr("loads")(doc.dump());
}

}  // namespace

PYBIND11_MODULE(_jnc, m) {
  m.doc() = "j-neighborhood centralities of undirected graphs";

  // Translators run newest first, so the derived type is registered last.
  py::register_exception<jnc::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<jnc::ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<jnc::Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<jnc::Edge>& edges) { return jnc::build_graph(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_static(
          "from_edge_list",
          [](const std::string& text) { return jnc::graph_from_parsed(jnc::parse_edge_list_text(text)); },
          py::arg("text"))
      .def_property_readonly("num_vertices", &jnc::Graph::num_vertices)
      .def_property_readonly("num_edges", &jnc::Graph::num_edges)
      .def_property_readonly("labels", &jnc::Graph::labels)
      .def("degree", [](const jnc::Graph& g, jnc::Vertex v) { return jnc::degree(g, v); })
      .def("neighbors",
           [](const jnc::Graph& g, jnc::Vertex v) {
             jnc::degree(g, v);
             auto nb = g.neighbors(v);
             return std::vector<jnc::Vertex>(nb.begin(), nb.end());
           })
      .def("edges", &jnc::Graph::edges)
      .def("canonical", &jnc::to_canonical_string)
      .def("__repr__", [](const jnc::Graph& g) {
        return "<Graph n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def(
      "generate",
      [](const std::string& spec, std::uint64_t seed) { return jnc::generate(jnc::parse_generator_spec(spec, seed).spec); },
      py::arg("spec"), py::arg("seed") = 1);
  m.def("erdos_renyi", &jnc::erdos_renyi, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("barabasi_albert", &jnc::barabasi_albert, py::arg("n"), py::arg("m"), py::arg("seed"));
  m.def("watts_strogatz", &jnc::watts_strogatz, py::arg("n"), py::arg("k"), py::arg("p"), py::arg("seed"));
  m.def("boccaletti_hwang_latora", &jnc::boccaletti_hwang_latora, py::arg("n"), py::arg("m"), py::arg("n0"),
        py::arg("seed"));
  m.def("average_clustering", &jnc::average_clustering);

  m.def(
      "bfs_layers",
      [](const jnc::Graph& g, jnc::Vertex root, std::optional<std::size_t> j_max) {
        return jnc::bfs_layers(g, root, j_max).layers;
      },
      py::arg("g"), py::arg("root"), py::arg("j_max") = py::none());

  py::class_<jnc::CentralityRecord>(m, "CentralityRecord")
      .def_readonly("vertex", &jnc::CentralityRecord::vertex)
      .def_readonly("j", &jnc::CentralityRecord::j)
      .def_readonly("out_edges", &jnc::CentralityRecord::out_edges)
      .def_readonly("layer_size", &jnc::CentralityRecord::layer_size)
      .def_readonly("value", &jnc::CentralityRecord::value);

  m.def("xi", &jnc::xi, py::arg("g"), py::arg("i"), py::arg("j"));
  m.def(
      "xi_all",
      [](const jnc::Graph& g, std::size_t j_max, unsigned workers) {
        jnc::CentralityMatrix cm;
        {
          py::gil_scoped_release release;
          cm = jnc::xi_all(g, j_max, workers);
        }
        const auto n = static_cast<py::ssize_t>(cm.num_vertices());
        const auto cols = static_cast<py::ssize_t>(j_max + 1);
        py::array_t<double> values({n, cols});
        py::array_t<std::uint64_t> out_edges({n, cols}), layer_size({n, cols});
        auto v = values.mutable_unchecked<2>();
        auto o = out_edges.mutable_unchecked<2>();
        auto s = layer_size.mutable_unchecked<2>();
        for (py::ssize_t i = 0; i < n; ++i)
          for (py::ssize_t j = 0; j < cols; ++j) {
            const auto& r = cm.at(static_cast<jnc::Vertex>(i), static_cast<std::size_t>(j));
            v(i, j) = r.value;
            o(i, j) = r.out_edges;
            s(i, j) = r.layer_size;
          }
        py::dict out;
        out["xi"] = values;
        out["out_edges"] = out_edges;
        out["layer_size"] = layer_size;
        return out;
      },
      py::arg("g"), py::arg("j_max") = jnc::kDefaultJMax, py::arg("workers") = 0);
  m.def("xi_quadratic_oracle", &jnc::xi_quadratic_oracle, py::arg("g"), py::arg("i"), py::arg("j"));
  m.def("ksi_centrality", &jnc::ksi_centrality, py::arg("g"), py::arg("i"));

  m.def(
      "laplacian_quadratic_form",
      [](const jnc::Graph& g, const std::vector<double>& x) { return jnc::laplacian_quadratic_form(g, x); },
      py::arg("g"), py::arg("x"));

  py::class_<jnc::SpectralEstimate>(m, "SpectralEstimate")
      .def_readonly("lambda_max", &jnc::SpectralEstimate::lambda_max)
      .def_readonly("iterations", &jnc::SpectralEstimate::iterations)
      .def_readonly("residual", &jnc::SpectralEstimate::residual)
      .def_readonly("converged", &jnc::SpectralEstimate::converged);
  m.def("lambda_max", &jnc::lambda_max, py::arg("g"), py::arg("tol") = jnc::kDefaultSpectralTol,
        py::arg("max_iter") = 0, py::arg("seed") = 0);
  m.def(
      "cheeger_brute_force",
      [](const jnc::Graph& g) {
        const auto r = jnc::cheeger_brute_force(g);
        return py::make_tuple(r.num, r.den);
      },
      py::arg("g"));
  m.def(
      "verify_bounds",
      [](const jnc::Graph& g, std::size_t j_max, double tol, std::uint64_t seed) {
        return to_python(jnc::bound_report_json(jnc::verify_bounds(g, j_max, tol, seed), g));
      },
      py::arg("g"), py::arg("j_max") = jnc::kDefaultJMax, py::arg("tol") = 1e-6, py::arg("seed") = 0);

  m.def(
      "skewness", [](const std::vector<double>& values) { return jnc::skewness(values); }, py::arg("values"));
  m.def(
      "shape_verdict",
      [](const std::vector<double>& values, std::size_t bins, double r2, double skew) {
        jnc::Thresholds t;
        t.min_r_squared = r2;
        t.min_skewness = skew;
        auto report = jnc::shape_verdict(values, bins, t);
        return to_python(jnc::distribution_report_json("values", std::nullopt, {report})["per_j"][0]);
      },
      py::arg("values"), py::arg("bins") = jnc::kDefaultBins, py::arg("r2") = 0.8, py::arg("skew") = 0.5);
}
