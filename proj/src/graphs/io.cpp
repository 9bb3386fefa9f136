#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "drg/graphs/graph.hpp"

namespace drg::graphs {

void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& is) {
  std::size_t n = 0, m = 0;
  if (!(is >> n >> m)) throw GraphError("edge list: missing header 'n m'");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(is >> u >> v)) throw GraphError("edge list: expected " + std::to_string(m) + " edges, read " + std::to_string(i));
    if (u < 0 || v < 0) throw GraphError("edge list: negative vertex");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (is >> extra) throw GraphError("edge list: trailing data '" + extra + "'");
  return Graph(n, edges);
}

void write_labels(std::ostream& os, const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) os << g.label(v) << '\n';
}

std::vector<std::string> read_labels(std::istream& is) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

Graph load_graph(const std::string& path, const std::string& labels_path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  Graph g = read_edge_list(in);
  if (labels_path.empty()) return g;
  std::ifstream lin(labels_path);
  if (!lin) throw GraphError("cannot open " + labels_path);
  return Graph(g.order(), g.edges(), read_labels(lin));
}

void save_graph(const Graph& g, const std::string& path, const std::string& labels_path) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write " + path);
  write_edge_list(out, g);
  if (labels_path.empty()) return;
  std::ofstream lout(labels_path);
  if (!lout) throw GraphError("cannot write " + labels_path);
  write_labels(lout, g);
}

}  // namespace drg::graphs
