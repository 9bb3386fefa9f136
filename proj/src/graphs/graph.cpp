#include <algorithm>
#include <queue>

#include "drg/graphs/graph.hpp"

namespace drg::graphs {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : adjacency_(n), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n) throw GraphError("label count does not match vertex count");
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& nb = adjacency_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw GraphError("repeated edge at vertex " + std::to_string(v));
  }
  edge_count_ = edges.size();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adjacency_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (adjacency_.empty()) return std::nullopt;
  std::size_t d = adjacency_[0].size();
  for (const auto& nb : adjacency_)
    if (nb.size() != d) return std::nullopt;
  return d;
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nb : adjacency_) d = std::max(d, nb.size());
  return d;
}

std::string Graph::label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_.at(v); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_connected() const {
  if (adjacency_.empty()) return true;
  auto d = bfs_distances(*this, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool Graph::is_bipartite() const {
  std::vector<int> colour(adjacency_.size(), -1);
  for (Vertex s = 0; s < adjacency_.size(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v : adjacency_[u]) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          q.push(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph bipartite_double(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(u, static_cast<Vertex>(v + n));
    edges.emplace_back(v, static_cast<Vertex>(u + n));
  }
  std::vector<std::string> labels;
  labels.reserve(2 * n);
  for (Vertex x = 0; x < n; ++x) labels.push_back(g.label(x) + "+");
  for (Vertex x = 0; x < n; ++x) labels.push_back(g.label(x) + "-");
  return Graph(2 * n, edges, std::move(labels));
}

}  // namespace drg::graphs
