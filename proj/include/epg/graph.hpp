#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "epg/bitset.hpp"

namespace epg {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1 with bit-packed adjacency.
// add_edge keeps adjacency symmetric and irreflexive.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : n_(n), adj_(n, Bitset(n)) {}

  static SimpleGraph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const;

  void add_edge(Vertex u, Vertex v);
  // Connects every pair of distinct members.
  void add_clique(const Bitset& members);

  bool has_edge(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return adj_[v]; }
  Bitset closed_neighborhood(Vertex v) const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  SimpleGraph induced(std::span<const Vertex> vertices) const;

  // Relabels vertex u as perm[u]; perm must be a permutation of 0..n-1.
  SimpleGraph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Bitset> adj_;
};

// Shortest-path length with a distinguished value for "no path".
struct Distance {
  static constexpr std::size_t kInfinite = std::numeric_limits<std::size_t>::max();
  std::size_t value = kInfinite;

  bool is_infinite() const noexcept { return value == kInfinite; }
  friend bool operator==(Distance, Distance) = default;
};

std::string to_string(Distance d);

std::size_t degree(const SimpleGraph& g, Vertex v);
std::size_t min_degree(const SimpleGraph& g);
SimpleGraph complement(const SimpleGraph& g);

// BFS distances from source; Distance::kInfinite for unreachable vertices.
std::vector<std::size_t> bfs_distances(const SimpleGraph& g, Vertex source);
Distance diameter(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);

// Global minimum edge cut (Stoer-Wagner on unit weights).
std::size_t edge_connectivity(const SimpleGraph& g);

// Edge-list text format: "n m" followed by m lines "u v" with u < v.
void write_edge_list(std::ostream& out, const SimpleGraph& g);
SimpleGraph read_edge_list(std::istream& in);

// Graphviz export; labels may be empty (vertex indices are used).
void write_dot(std::ostream& out, const SimpleGraph& g, std::span<const std::string> labels,
               const std::string& name = "G");

}  // namespace epg
