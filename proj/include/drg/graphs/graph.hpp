#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drg/exact/algebraic.hpp"
#include "drg/spectral/intersection_array.hpp"

namespace drg::graphs {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Bad construction parameters (parity, size).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input graph does not meet an operation's structural precondition.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph with sorted adjacency lists and optional labels.
class Graph {
 public:
  Graph() = default;
  /// Throws GraphError on loops, repeated edges or endpoints out of range.
  Graph(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  std::optional<std::size_t> regular_degree() const;
  std::size_t max_degree() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// The stored label, or the vertex index when unlabeled.
  std::string label(Vertex v) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;
  bool is_connected() const;
  bool is_bipartite() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

enum class Family { Cycle, Hypercube, FoldedCube, Odd };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// cycle: n-gon (n >= 3); hypercube: dimension n (n >= 1); folded_cube: n-cube
/// modulo complementation (n odd, n >= 5); odd: (n-1)/2-subsets of an n-set,
/// adjacent when disjoint (n odd, n >= 5).
Graph construct_family(Family family, int n);
Graph complete_graph(int n);

/// Vertices x+ (index x) and x- (index x + n); x^g ~ y^h iff x ~ y and g != h.
Graph bipartite_double(const Graph& g);

struct DistanceData {
  std::size_t n = 0;
  std::vector<std::uint16_t> dist;  // row-major n x n
  int diameter = 0;
  std::vector<std::size_t> sphere_sizes;  // from vertex 0

  int at(Vertex u, Vertex v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
};

/// BFS distances from every vertex. Throws GraphError when disconnected.
DistanceData distance_data(const Graph& g);

/// Distances from one vertex (BFS).
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Evidence that a graph is not distance-regular: for the ordered pair (x, y)
/// at distance h, the count of `what` disagrees with the first pair seen.
struct NonDrgWitness {
  Vertex x = 0;
  Vertex y = 0;
  int distance = 0;
  std::string what;  // "c", "a", "b" or "p^h_ij"
  int i = 0;
  int j = 0;
  std::size_t expected = 0;
  std::size_t found = 0;
  std::string describe() const;
};

struct DrgCheck {
  std::optional<spectral::IntersectionArray> array;
  std::optional<NonDrgWitness> witness;
  bool is_distance_regular() const { return array.has_value(); }
};

/// Checks that c_i, a_i, b_i are well defined over all ordered pairs; strict
/// mode additionally checks every p^h_ij. Throws GraphError when disconnected.
DrgCheck intersection_array(const Graph& g, bool strict = false);

/// c_i, a_i, b_i read off the distance partition around one vertex, with a
/// consistency check only over that partition. Used for large known graphs.
std::optional<spectral::IntersectionArray> intersection_array_from_vertex(const Graph& g, Vertex base = 0);

/// Distance-2 sphere of x, adjacent when at distance 2 in g.
Graph local_graph_g22(const Graph& g, Vertex x);

struct SpectrumEntry {
  exact::AlgebraicReal value;
  std::size_t multiplicity = 0;
};

/// det(xI - A) over the integers.
exact::IntPolynomial characteristic_polynomial(const Graph& g);

/// Distinct adjacency eigenvalues in descending order with multiplicities.
std::vector<SpectrumEntry> graph_spectrum(const Graph& g, std::size_t cap = 512);

/// Edge-list text: "n m" then m lines "u v".
void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);
void write_labels(std::ostream& os, const Graph& g);
std::vector<std::string> read_labels(std::istream& is);
Graph load_graph(const std::string& path, const std::string& labels_path = {});
void save_graph(const Graph& g, const std::string& path, const std::string& labels_path = {});

}  // namespace drg::graphs
