#include <bit>
#include <string>
#include <unordered_map>

#include "drg/graphs/graph.hpp"

namespace drg::graphs {

namespace {

std::string bits(std::uint64_t x, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i)
    if ((x >> (width - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

std::string subset_label(std::uint64_t mask, int n) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < n; ++i) {
    if (!((mask >> i) & 1U)) continue;
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

Graph cycle(int n) {
  if (n < 3) throw ParameterError("cycle needs n >= 3");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    labels.push_back(std::to_string(i));
  }
  return Graph(static_cast<std::size_t>(n), edges, std::move(labels));
}

Graph hypercube(int dim) {
  if (dim < 1) throw ParameterError("hypercube needs dimension >= 1");
  if (dim > 24) throw ParameterError("hypercube dimension too large");
  const std::uint64_t n = std::uint64_t{1} << dim;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::uint64_t x = 0; x < n; ++x) {
    labels.push_back(bits(x, dim));
    for (int i = 0; i < dim; ++i) {
      std::uint64_t y = x ^ (std::uint64_t{1} << i);
      if (x < y) edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
    }
  }
  return Graph(static_cast<std::size_t>(n), edges, std::move(labels));
}

Graph folded_cube(int n) {
  if (n < 5 || n % 2 == 0) throw ParameterError("folded cube needs odd n >= 5");
  if (n > 25) throw ParameterError("folded cube dimension too large");
  // Representatives: n-bit strings with the top bit clear. Hamming distance 1
  // or n-1 between representatives means adjacent in the quotient.
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::uint64_t x = 0; x < count; ++x) {
    labels.push_back(bits(x, n));
    for (int i = 0; i < n; ++i) {
      std::uint64_t y = x ^ (std::uint64_t{1} << i);
      if (y >= count) y ^= full;  // complement back to a representative
      if (x < y) edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
    }
  }
  return Graph(static_cast<std::size_t>(count), edges, std::move(labels));
}

Graph odd_graph(int n) {
  if (n < 5 || n % 2 == 0) throw ParameterError("Odd graph needs an odd ground set of size >= 5");
  if (n > 25) throw ParameterError("Odd graph ground set too large");
  const int r = (n - 1) / 2;
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> subsets;
  std::unordered_map<std::uint64_t, Vertex> index;
  for (std::uint64_t m = 0; m <= full; ++m)
    if (std::popcount(m) == r) {
      index.emplace(m, static_cast<Vertex>(subsets.size()));
      subsets.push_back(m);
    }
  // Disjoint r-subsets of an (2r+1)-set: the complement minus one point.
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    labels.push_back(subset_label(subsets[i], n));
    const std::uint64_t rest = full & ~subsets[i];
    for (int t = 0; t < n; ++t) {
      if (!((rest >> t) & 1U)) continue;
      const Vertex j = index.at(rest & ~(std::uint64_t{1} << t));
      if (i < j) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  return Graph(subsets.size(), edges, std::move(labels));
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Cycle: return "cycle";
    case Family::Hypercube: return "hypercube";
    case Family::FoldedCube: return "folded_cube";
    case Family::Odd: return "odd";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::Cycle, Family::Hypercube, Family::FoldedCube, Family::Odd})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

Graph construct_family(Family family, int n) {
  switch (family) {
    case Family::Cycle: return cycle(n);
    case Family::Hypercube: return hypercube(n);
    case Family::FoldedCube: return folded_cube(n);
    case Family::Odd: return odd_graph(n);
  }
  throw ParameterError("unknown family");
}

Graph complete_graph(int n) {
  if (n < 1) throw ParameterError("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(static_cast<std::size_t>(n), edges);
}

}  // namespace drg::graphs
