// Python face of the library: graphs, exact solvers, constructive covers,
// bound tables, and the theorem sweep, with plain lists/dicts at the edges.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isolate/bounds.hpp"
#include "isolate/constructive.hpp"
#include "isolate/errors.hpp"
#include "isolate/families.hpp"
#include "isolate/graph.hpp"
#include "isolate/graph_io.hpp"
#include "isolate/patterns.hpp"
#include "isolate/rng.hpp"
#include "isolate/solvers.hpp"
#include "isolate/verify.hpp"

namespace py = pybind11;
using namespace isolate;

namespace {

std::vector<int> vs_list(const VertexSet &s) { return s.to_vector(); }

VertexSet list_vs(int n, const std::vector<int> &vs) {
    VertexSet s(n);
    for (int v : vs) s.add(v);
    return s;
}

py::dict cert_dict(const Graph &g, const Certificate &c) {
    py::dict d;
    d["set"] = vs_list(c.set);
    d["size"] = static_cast<int>(c.set.count());
    d["family"] = c.family.name();
    d["producer"] = c.producer;
    if (c.promised_bound)
        d["promised"] = c.promised_bound->str();
    else
        d["promised"] = py::none();
    d["valid"] = check_certificate(g, c);
    return d;
}

GridKind kind_of(const std::string &kind) {
    if (kind == "grid") return GridKind::grid;
    if (kind == "cylinder") return GridKind::cylinder;
    if (kind == "torus") return GridKind::torus;
    throw parameter_error("unknown lattice kind '" + kind + "' (grid, cylinder, torus)");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "F-isolation numbers: exact solvers, constructions, bounds, sweeps";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<parameter_error>(m, "ParameterError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>> &>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def("edges", &Graph::edges)
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors", [](const Graph &g, int v) { return vs_list(g.neighbors(v)); }, py::arg("v"))
        .def("min_degree", &Graph::min_degree)
        .def("max_degree", &Graph::max_degree)
        .def("is_connected", &Graph::is_connected)
        .def("is_tree", &Graph::is_tree)
        .def("is_bipartite", [](const Graph &g) { return g.is_bipartite(); })
        .def("complement", &Graph::complement)
        .def("square", &Graph::square)
        .def("bipartite_double", &Graph::bipartite_double)
        .def("induced",
             [](const Graph &g, const std::vector<int> &keep) {
                 return g.induced(list_vs(g.n(), keep));
             },
             py::arg("keep"))
        .def("remainder",
             [](const Graph &g, const std::vector<int> &s) {
                 return vs_list(g.remainder(list_vs(g.n(), s)));
             },
             py::arg("set"))
        .def_static("cartesian_product", &Graph::cartesian_product, py::arg("g"), py::arg("h"))
        .def("__repr__", [](const Graph &g) {
            return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
        });

    // io
    m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
    m.def("emit_edge_list", &emit_edge_list, py::arg("g"));
    m.def("parse_graph6", &parse_graph6, py::arg("text"));
    m.def("emit_graph6", &emit_graph6, py::arg("g"));
    m.def("load_graph_file", &load_graph_file, py::arg("path"));

    // named graphs
    m.def("path_graph", &path_graph, py::arg("n"));
    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("empty_graph", &empty_graph, py::arg("n"));
    m.def("complete_bipartite", &complete_bipartite, py::arg("p"), py::arg("q"));
    m.def("star_graph", &star_graph, py::arg("leaves"));
    m.def("petersen", &petersen);
    m.def("hypercube", &hypercube, py::arg("d"));
    m.def("random_tree",
          [](int n, std::uint64_t seed) {
              Rng rng(seed);
              return random_tree(n, rng);
          },
          py::arg("n"), py::arg("seed"));
    m.def("random_regular",
          [](int n, int degree, std::uint64_t seed) {
              Rng rng(seed);
              return random_regular(n, degree, rng);
          },
          py::arg("n"), py::arg("degree"), py::arg("seed"));
    m.def("grid_graph",
          [](const std::string &kind, int s, int t) { return grid_graph(kind_of(kind), s, t); },
          py::arg("kind"), py::arg("s"), py::arg("t"));

    // exact solvers
    m.def("exact_isolation",
          [](const Graph &g, const std::string &family) {
              ExactResult r = exact_isolation(g, parse_family_spec(family));
              return py::make_tuple(r.value, vs_list(r.certificate.set));
          },
          py::arg("g"), py::arg("family"));
    m.def("exact_domination",
          [](const Graph &g) {
              SetResult r = exact_domination(g);
              return py::make_tuple(r.value, vs_list(r.set));
          },
          py::arg("g"));
    m.def("max_f_free_subset",
          [](const Graph &g, const std::string &family) {
              SetResult r = max_f_free_subset(g, parse_family_spec(family));
              return py::make_tuple(r.value, vs_list(r.set));
          },
          py::arg("g"), py::arg("family"));
    m.def("exact_k_independence",
          [](const Graph &g, int k) {
              SetResult r = exact_k_independence(g, k);
              return py::make_tuple(r.value, vs_list(r.set));
          },
          py::arg("g"), py::arg("k"));
    m.def("is_f_free",
          [](const Graph &g, const std::vector<int> &region, const std::string &family) {
              return is_f_free(g, list_vs(g.n(), region), parse_family_spec(family));
          },
          py::arg("g"), py::arg("region"), py::arg("family"));
    m.def("check_certificate",
          [](const Graph &g, const std::vector<int> &set, const std::string &family) {
              Certificate c{list_vs(g.n(), set), parse_family_spec(family), "python", std::nullopt};
              return check_certificate(g, c);
          },
          py::arg("g"), py::arg("set"), py::arg("family"));

    // constructive covers
    m.def("isolating_third",
          [](const Graph &g) { return cert_dict(g, isolating_third(g)); }, py::arg("g"));
    m.def("isolating_components",
          [](const Graph &g) { return cert_dict(g, isolating_components(g)); }, py::arg("g"));
    m.def("tree_k_isolating",
          [](const Graph &t, int k) { return cert_dict(t, tree_k_isolating(t, k)); },
          py::arg("t"), py::arg("k"));
    m.def("randomized_isolating",
          [](const Graph &g, std::uint64_t seed) {
              Rng rng(seed);
              return cert_dict(g, randomized_isolating(g, rng));
          },
          py::arg("g"), py::arg("seed"));
    m.def("grid_isolating",
          [](const std::string &kind, int s, int t) {
              Graph g = grid_graph(kind_of(kind), s, t);
              return cert_dict(g, grid_isolating(kind_of(kind), s, t));
          },
          py::arg("kind"), py::arg("s"), py::arg("t"));

    // bounds
    m.def("bound_report",
          [](const Graph &g, int k, bool exact_aux) {
              py::list rows;
              for (const BoundEntry &e : bound_report(g, k, exact_aux).entries) {
                  py::dict d;
                  d["name"] = e.name;
                  d["side"] = e.upper ? "upper" : "lower";
                  d["value"] = e.applicable ? py::object(py::str(e.value_str())) : py::none();
                  d["applicable"] = e.applicable;
                  d["reason"] = e.reason;
                  rows.append(d);
              }
              return rows;
          },
          py::arg("g"), py::arg("k"), py::arg("exact_aux") = false);

    // sweep
    m.def("sweep_theorems",
          [](int n_max, const std::vector<std::string> &checks, bool connected, bool dedup,
             int jobs) {
              py::list rows;
              for (const CheckResult &r : sweep_theorems(n_max, checks, connected, dedup, jobs)) {
                  py::dict d;
                  d["check"] = r.check;
                  d["graphs_tested"] = r.graphs_tested;
                  d["violations"] = r.violations;
                  d["equality_count"] = r.equality_count;
                  d["example_g6"] = r.example_g6;
                  rows.append(d);
              }
              return rows;
          },
          py::arg("n_max"), py::arg("checks") = std::vector<std::string>{}, py::arg("connected") = false,
          py::arg("dedup") = false, py::arg("jobs") = 1);
    m.def("sweep_check_names", &sweep_check_names);
}
