#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nprime/errors.hpp"
#include "nprime/families.hpp"
#include "nprime/graph.hpp"
#include "nprime/io.hpp"
#include "nprime/labelers.hpp"
#include "nprime/search.hpp"
#include "nprime/trees.hpp"

namespace py = pybind11;
using namespace nprime;

namespace {

// Labels cross the boundary as plain lists; index 0 is vertex 1.
std::vector<int> labels_of(const Labeling& f) { return f.values(); }

SearchConfig make_config(std::optional<std::uint64_t> budget, const std::string& order, bool find_all) {
  SearchConfig cfg;
  cfg.node_budget = budget;
  cfg.find_all = find_all;
  if (order == "deg") cfg.order = VertexOrder::DegreeDescending;
  else if (order == "nat") cfg.order = VertexOrder::Natural;
  else throw UsageError("order must be 'deg' or 'nat'");
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Neighborhood-prime labeling toolkit";

  // UsageError, InvalidSpec and ParseError surface as ValueError.
  py::register_exception<LabelingInvalid>(m, "LabelingInvalid", PyExc_ValueError);
  py::register_exception<UnsupportedParameters>(m, "UnsupportedParameters", PyExc_RuntimeError);
  py::register_exception<UnsupportedStructure>(m, "UnsupportedStructure", PyExc_RuntimeError);
  py::register_exception<PreconditionViolated>(m, "PreconditionViolated", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) { return neighborhood(g, v); })
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<Violation>(m, "Violation")
      .def_readonly("vertex", &Violation::vertex)
      .def_readonly("neighbor_labels", &Violation::neighbor_labels)
      .def_readonly("gcd", &Violation::gcd_value);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("ok", &VerificationReport::ok)
      .def_readonly("violations", &VerificationReport::violations)
      .def_readonly("checked_count", &VerificationReport::checked_count)
      .def("__bool__", [](const VerificationReport& r) { return r.ok; })
      .def("__str__", [](const VerificationReport& r) { return format_report(r); });

  py::class_<SearchOutcome>(m, "SearchOutcome")
      .def_property_readonly("status", [](const SearchOutcome& o) { return std::string(to_string(o.status)); })
      .def_property_readonly("labeling",
                             [](const SearchOutcome& o) -> std::optional<std::vector<int>> {
                               if (!o.labeling) return std::nullopt;
                               return labels_of(*o.labeling);
                             })
      .def_readonly("nodes_explored", &SearchOutcome::nodes_explored)
      .def_property_readonly("all_solutions", [](const SearchOutcome& o) {
        std::vector<std::vector<int>> out;
        for (const auto& f : o.all_solutions) out.push_back(labels_of(f));
        return out;
      });

  py::class_<SizeReport>(m, "SizeReport")
      .def_readonly("n", &SizeReport::n)
      .def_readonly("tree_count", &SizeReport::tree_count)
      .def_readonly("solved_count", &SizeReport::solved_count)
      .def_readonly("failures", &SizeReport::failures)
      .def_readonly("inconclusive", &SizeReport::inconclusive)
      .def_readonly("seconds", &SizeReport::seconds);

  m.def("gcd_of", [](const std::vector<std::int64_t>& v) { return gcd_of(v); }, py::arg("values"));
  m.def(
      "verify", [](const Graph& g, std::vector<int> labels) { return verify(g, Labeling(std::move(labels))); },
      py::arg("graph"), py::arg("labels"));
  m.def("is_tree", &is_tree);

  m.def(
      "generate", [](const std::string& family) { return generate(parse_family(family)); }, py::arg("family"),
      "Builds a family graph from text such as 'gear:4' or 'snake:5,3'.");
  m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));
  m.def(
      "label",
      [](const std::string& family) {
        auto [g, f] = label_family(parse_family(family));
        return py::make_tuple(g, labels_of(f));
      },
      py::arg("family"), "Returns (graph, labels) for a family with a constructive labeling.");
  m.def(
      "label_bivalent_free", [](const Graph& t) { return labels_of(label_bivalent_free(t)); }, py::arg("tree"));
  m.def(
      "extend_pendant",
      [](const Graph& g, std::vector<int> labels, Vertex v) {
        auto [h, f] = extend_pendant(g, Labeling(std::move(labels)), v);
        return py::make_tuple(h, labels_of(f));
      },
      py::arg("graph"), py::arg("labels"), py::arg("vertex"));
  m.def(
      "contract_one_max",
      [](const Graph& g, std::vector<int> labels, Vertex u1, Vertex u2) {
        auto [h, f] = contract_one_max(g, Labeling(std::move(labels)), u1, u2);
        return py::make_tuple(h, labels_of(f));
      },
      py::arg("graph"), py::arg("labels"), py::arg("u1"), py::arg("u2"));

  m.def("is_prime", &is_prime);
  m.def("bertrand_prime", &bertrand_prime, py::arg("n"));
  m.def(
      "coprime_matching",
      [](int n) {
        const auto cm = coprime_matching(n);
        py::dict out;
        for (int x = 1; x <= n; ++x) out[py::int_(x)] = cm[x];
        return out;
      },
      py::arg("n"));
  m.def(
      "find_labeling",
      [](const Graph& g, std::optional<std::uint64_t> budget, const std::string& order, bool find_all) {
        const auto cfg = make_config(budget, order, find_all);
        py::gil_scoped_release release;
        return find_labeling(g, cfg);
      },
      py::arg("graph"), py::arg("budget") = std::optional<std::uint64_t>{10'000'000}, py::arg("order") = "deg",
      py::arg("find_all") = false);
  m.def("brute_force_oracle", &brute_force_oracle, py::arg("graph"), py::arg("find_all") = false);

  m.def("ahu_canonical", &ahu_canonical);
  m.def("enumerate_free_trees", &enumerate_free_trees, py::arg("n"));
  m.def(
      "scan_conjecture",
      [](int max_n, int jobs, std::optional<std::uint64_t> budget) {
        const auto cfg = make_config(budget, "deg", false);
        py::gil_scoped_release release;
        return scan_conjecture(max_n, cfg, jobs).sizes;
      },
      py::arg("max_n"), py::arg("jobs") = 1, py::arg("budget") = std::optional<std::uint64_t>{10'000'000});

  m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
  m.def("write_edge_list", &write_edge_list, py::arg("graph"));
}
