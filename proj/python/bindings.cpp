#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "drg/classify/classify.hpp"
#include "drg/classify/sieve.hpp"
#include "drg/cli/cli.hpp"
#include "drg/cli/format.hpp"
#include "drg/graphs/graph.hpp"
#include "drg/spectral/qpoly.hpp"

namespace py = pybind11;
using namespace drg;

namespace {

graphs::Graph graph_from(std::size_t n, const std::vector<std::pair<graphs::Vertex, graphs::Vertex>>& edges) {
  return graphs::Graph(n, edges);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact spectral analysis of distance-regular graphs";

  py::register_exception<graphs::GraphError>(m, "GraphError", PyExc_ValueError);

  m.def(
      "construct",
      [](const std::string& family, int n) {
        auto f = graphs::parse_family(family);
        if (!f) throw py::value_error("unknown family '" + family + "'");
        graphs::Graph g = graphs::construct_family(*f, n);
        return py::make_tuple(g.order(), g.edges());
      },
      py::arg("family"), py::arg("n"), "(vertex count, edge list) of a family graph");

  m.def(
      "intersection_array",
      [](std::size_t n, const std::vector<std::pair<graphs::Vertex, graphs::Vertex>>& edges,
         bool strict) -> std::optional<std::string> {
        auto check = graphs::intersection_array(graph_from(n, edges), strict);
        if (!check.array) return std::nullopt;
        return check.array->to_string();
      },
      py::arg("n"), py::arg("edges"), py::arg("strict") = false,
      "Intersection array as text, or None when the graph is not distance-regular");

  m.def(
      "graph_spectrum",
      [](std::size_t n, const std::vector<std::pair<graphs::Vertex, graphs::Vertex>>& edges) {
        std::vector<std::pair<std::string, std::size_t>> out;
        for (const auto& e : graphs::graph_spectrum(graph_from(n, edges))) out.emplace_back(cli::exact_text(e.value), e.multiplicity);
        return out;
      },
      py::arg("n"), py::arg("edges"));

  m.def(
      "array_spectrum",
      [](const std::string& array) {
        spectral::SpectralData s(spectral::IntersectionArray::parse(array));
        std::vector<std::pair<std::string, std::string>> out;
        for (int i = 0; i <= s.diameter(); ++i)
          out.emplace_back(cli::exact_text(s.eigenvalues()[static_cast<std::size_t>(i)]),
                           cli::exact_text(s.multiplicity_value(i)));
        return out;
      },
      py::arg("array"), "(eigenvalue, multiplicity) pairs, descending");

  m.def(
      "classify",
      [](const std::string& array) { return classify::classify(spectral::IntersectionArray::parse(array)).to_string(); },
      py::arg("array"));

  m.def(
      "evaluate_candidate",
      [](long beta, long mu) { return classify::evaluate_candidate(beta, mu).to_line(); }, py::arg("beta"),
      py::arg("mu"), "Sieve record line for one (beta, mu) point");

  m.def(
      "parse_record_line", [](const std::string& line) { return classify::parse_record_line(line); },
      py::arg("line"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line tool in-process; returns (exit code, stdout, stderr)");
}
