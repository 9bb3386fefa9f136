#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <queue>
#include <sstream>

#include "drg/graphs/graph.hpp"

namespace drg::graphs {

using exact::BigInt;

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> d(g.order(), -1);
  std::queue<Vertex> q;
  d[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex v : g.neighbors(u)) {
      if (d[v] >= 0) continue;
      d[v] = d[u] + 1;
      q.push(v);
    }
  }
  return d;
}

DistanceData distance_data(const Graph& g) {
  DistanceData out;
  out.n = g.order();
  if (out.n == 0) throw GraphError("empty graph");
  out.dist.assign(out.n * out.n, 0);
  for (Vertex x = 0; x < out.n; ++x) {
    auto d = bfs_distances(g, x);
    for (Vertex y = 0; y < out.n; ++y) {
      if (d[y] < 0) throw GraphError("graph is disconnected");
      out.dist[static_cast<std::size_t>(x) * out.n + y] = static_cast<std::uint16_t>(d[y]);
      out.diameter = std::max(out.diameter, d[y]);
    }
  }
  out.sphere_sizes.assign(static_cast<std::size_t>(out.diameter) + 1, 0);
  for (Vertex y = 0; y < out.n; ++y) ++out.sphere_sizes[out.at(0, y)];
  return out;
}

std::string NonDrgWitness::describe() const {
  std::ostringstream os;
  os << "pair (" << x << "," << y << ") at distance " << distance << ": ";
  if (what == "p^h_ij")
    os << "p^" << distance << "_" << i << j;
  else
    os << what << "_" << distance;
  os << " = " << found << ", expected " << expected;
  return os.str();
}

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

}  // namespace

DrgCheck intersection_array(const Graph& g, bool strict) {
  const std::size_t n = g.order();
  if (n == 0) throw GraphError("empty graph");
  // cab[h] = {c_h, a_h, b_h} as first observed
  std::vector<std::array<std::size_t, 3>> cab;
  int diameter = 0;
  for (Vertex x = 0; x < n; ++x) {
    auto d = bfs_distances(g, x);
    for (Vertex y = 0; y < n; ++y) {
      if (d[y] < 0) throw GraphError("graph is disconnected");
      const int h = d[y];
      diameter = std::max(diameter, h);
      std::array<std::size_t, 3> cnt{0, 0, 0};
      for (Vertex z : g.neighbors(y)) ++cnt[static_cast<std::size_t>(d[z] - h + 1)];
      if (cab.size() <= static_cast<std::size_t>(h)) cab.resize(static_cast<std::size_t>(h) + 1, {kUnset, kUnset, kUnset});
      auto& ref = cab[static_cast<std::size_t>(h)];
      for (std::size_t t = 0; t < 3; ++t) {
        if (ref[t] == kUnset) {
          ref[t] = cnt[t];
        } else if (ref[t] != cnt[t]) {
          static const char* names[] = {"c", "a", "b"};
          DrgCheck out;
          out.witness = NonDrgWitness{x, y, h, names[t], 0, 0, ref[t], cnt[t]};
          return out;
        }
      }
    }
  }

  if (strict) {
    DistanceData dd = distance_data(g);
    const std::size_t span = static_cast<std::size_t>(diameter) + 1;
    std::vector<std::vector<std::size_t>> first(span);
    std::vector<std::size_t> table(span * span);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = 0; y < n; ++y) {
        const int h = dd.at(x, y);
        std::fill(table.begin(), table.end(), 0);
        for (Vertex z = 0; z < n; ++z)
          ++table[static_cast<std::size_t>(dd.at(x, z)) * span + dd.at(y, z)];
        auto& ref = first[static_cast<std::size_t>(h)];
        if (ref.empty()) {
          ref = table;
          continue;
        }
        for (std::size_t t = 0; t < table.size(); ++t) {
          if (ref[t] != table[t]) {
            DrgCheck out;
            out.witness = NonDrgWitness{x, y, h, "p^h_ij", static_cast<int>(t / span),
                                        static_cast<int>(t % span), ref[t], table[t]};
            return out;
          }
        }
      }
    }
  }

  if (diameter == 0) throw GraphError("single-vertex graph has no intersection array");
  std::vector<BigInt> b, c;
  for (int i = 0; i < diameter; ++i) b.emplace_back(static_cast<unsigned long>(cab[static_cast<std::size_t>(i)][2]));
  for (int i = 1; i <= diameter; ++i) c.emplace_back(static_cast<unsigned long>(cab[static_cast<std::size_t>(i)][0]));
  DrgCheck out;
  out.array = spectral::IntersectionArray(std::move(b), std::move(c));
  return out;
}

std::optional<spectral::IntersectionArray> intersection_array_from_vertex(const Graph& g, Vertex base) {
  auto d = bfs_distances(g, base);
  int diameter = 0;
  for (int x : d) {
    if (x < 0) throw GraphError("graph is disconnected");
    diameter = std::max(diameter, x);
  }
  if (diameter == 0) return std::nullopt;
  std::vector<std::array<std::size_t, 3>> cab(static_cast<std::size_t>(diameter) + 1, {kUnset, kUnset, kUnset});
  for (Vertex y = 0; y < g.order(); ++y) {
    const int h = d[y];
    std::array<std::size_t, 3> cnt{0, 0, 0};
    for (Vertex z : g.neighbors(y)) ++cnt[static_cast<std::size_t>(d[z] - h + 1)];
    auto& ref = cab[static_cast<std::size_t>(h)];
    if (ref[0] == kUnset)
      ref = cnt;
    else if (ref != cnt)
      return std::nullopt;
  }
  std::vector<BigInt> b, c;
  for (int i = 0; i < diameter; ++i) b.emplace_back(static_cast<unsigned long>(cab[static_cast<std::size_t>(i)][2]));
  for (int i = 1; i <= diameter; ++i) c.emplace_back(static_cast<unsigned long>(cab[static_cast<std::size_t>(i)][0]));
  return spectral::IntersectionArray(std::move(b), std::move(c));
}

Graph local_graph_g22(const Graph& g, Vertex x) {
  auto d = bfs_distances(g, x);
  std::vector<Vertex> sphere;
  std::vector<std::int64_t> index(g.order(), -1);
  int diameter = 0;
  for (Vertex y = 0; y < g.order(); ++y) {
    if (d[y] < 0) throw GraphError("graph is disconnected");
    diameter = std::max(diameter, d[y]);
    if (d[y] == 2) {
      index[y] = static_cast<std::int64_t>(sphere.size());
      sphere.push_back(y);
    }
  }
  if (diameter < 2) throw GraphError("local graph needs diameter >= 2");
  // y, z at distance 2: distinct, nonadjacent, with a common neighbour.
  std::vector<Edge> edges;
  std::vector<std::size_t> stamp(g.order(), kUnset);
  for (std::size_t i = 0; i < sphere.size(); ++i) {
    Vertex y = sphere[i];
    for (Vertex w : g.neighbors(y))
      for (Vertex z : g.neighbors(w)) stamp[z] = i;
    for (Vertex z : g.neighbors(y)) stamp[z] = kUnset;
    stamp[y] = kUnset;
    for (std::size_t j = i + 1; j < sphere.size(); ++j)
      if (stamp[sphere[j]] == i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  std::vector<std::string> labels;
  for (Vertex y : sphere) labels.push_back(g.label(y));
  return Graph(sphere.size(), edges, std::move(labels));
}

}  // namespace drg::graphs
