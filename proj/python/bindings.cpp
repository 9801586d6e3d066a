#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "algcon/bounds.hpp"
#include "algcon/clique.hpp"
#include "algcon/errors.hpp"
#include "algcon/graph.hpp"
#include "algcon/graph6.hpp"
#include "algcon/scan.hpp"
#include "algcon/spectra.hpp"
#include "algcon/transforms.hpp"

namespace py = pybind11;
using namespace algcon;

PYBIND11_MODULE(_algcon, m) {
  m.doc() = "Algebraic connectivity and clique number toolkit (native core)";

  auto base = py::register_exception<Error>(m, "AlgconError", PyExc_RuntimeError);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", base.ptr());
  py::register_exception<StructuralError>(m, "StructuralError", base.ptr());
  py::register_exception<NotApplicable>(m, "NotApplicable", base.ptr());
  py::register_exception<NumericalFailure>(m, "NumericalFailure", base.ptr());
  py::register_exception<GuardExceeded>(m, "GuardExceeded", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static("from_edges", [](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); },
                  py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("graph6", [](const Graph& g) { return write_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def("adjacent", &Graph::adjacent)
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("degree", &Graph::degree)
      .def("edge_count", &Graph::edge_count)
      .def("min_degree", &Graph::min_degree)
      .def("max_degree", &Graph::max_degree)
      .def("edges", &Graph::edges)
      .def("degree_sequence", &Graph::degree_sequence)
      .def("is_complete", &Graph::is_complete)
      .def("relabeled", &Graph::relabeled)
      .def("induced", [](const Graph& g, const std::vector<Vertex>& vs) { return g.induced(vs); })
      .def("__len__", &Graph::order)
      .def("__eq__", &Graph::operator==)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", e=" + std::to_string(g.edge_count()) + ", graph6='" +
               write_graph6(g) + "')";
      });

  // families and operations
  m.def("complete", &complete);
  m.def("empty_graph", &empty_graph);
  m.def("path", &path);
  m.def("cycle", &cycle);
  m.def("star", &star);
  m.def("complete_multipartite", [](const std::vector<int>& parts) { return complete_multipartite(parts); });
  m.def("turan", &turan);
  m.def("turan_edge_count", &turan_edge_count);
  m.def("kite", &kite);
  m.def("tailed_clique", [](int r, int k, int l) { return tailed_clique({r, k, l}); });
  m.def("theta_kite", &theta_kite);
  m.def("join", &join);
  m.def("disjoint_union", &disjoint_union);
  m.def("complement", &complement);
  m.def("attach_path", &attach_path);
  m.def("is_connected", &is_connected);
  m.def("connected_components", &connected_components);
  m.def("vertex_connectivity", &vertex_connectivity);
  m.def("is_isomorphic", &is_isomorphic);

  // graph6
  m.def("parse_graph6", [](const std::string& s, bool strict) { return parse_graph6(s, {strict}); }, py::arg("text"),
        py::arg("strict") = true);
  m.def("write_graph6", &write_graph6);

  // spectra
  m.def("laplacian_eigenvalues", &laplacian_eigenvalues);
  m.def("algebraic_connectivity", &algebraic_connectivity);
  m.def("lambda_max", &lambda_max);
  m.def("fiedler_vector", [](const Graph& g) {
    const auto f = fiedler_vector(g);
    py::dict d;
    d["values"] = f.values;
    d["alpha"] = f.alpha;
    d["multiplicity"] = f.multiplicity;
    return d;
  });

  // clique
  m.def("clique_number", &clique_number);
  m.def("max_clique", [](const Graph& g) { return max_clique(g).vertices; });
  m.def("is_kr_free", &is_kr_free);
  m.def("contains_complete_multipartite",
        [](const Graph& g, const std::vector<int>& parts) { return contains_complete_multipartite(g, parts); });

  // bounds
  m.def("clique_lower_bound", &clique_lower_bound);
  m.def("clique_upper_bound", &clique_upper_bound);
  m.def("kite_alpha_floor", &kite_alpha_floor);
  m.def("_sandwich_report_json", [](const Graph& g) { return to_json(sandwich_report(g)); });

  // transforms
  m.def("switch_clique_attachment", [](int r, int k, int l) { return switch_clique_attachment({r, k, l}); });
  m.def("tailed_clique_sweep", [](const std::vector<int>& orders, int max_total) {
    std::vector<std::tuple<int, int, int, double>> out;
    for (const auto& row : tailed_clique_sweep(orders, max_total)) out.emplace_back(row.r, row.k, row.l, row.alpha);
    return out;
  });

  // scan; releases the GIL while enumerating
  m.def(
      "_verify_max_theorem_json",
      [](int n, int r, int guard, int jobs) { return to_json(verify_max_theorem(n, r, {guard, jobs})); },
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "_verify_min_theorem_json",
      [](int n, int r, int guard, int jobs) { return to_json(verify_min_theorem(n, r, {guard, jobs})); },
      py::call_guard<py::gil_scoped_release>());
  m.def("_erdos_stone_trend_json", [](int r, int n_max) { return to_json(erdos_stone_trend(r, n_max)); });
}
