#include "epg/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>

#include "epg/error.hpp"

namespace epg {

SimpleGraph SimpleGraph::from_edges(std::size_t n, std::span<const Edge> edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adj_) twice += a.count();
  return twice / 2;
}

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) fail(ErrorKind::kOutOfRange, "edge endpoint out of range");
  if (u == v) fail(ErrorKind::kInvalidParameter, "self-loops are not allowed");
  adj_[u].set(v);
  adj_[v].set(u);
}

void SimpleGraph::add_clique(const Bitset& members) {
  members.for_each([&](std::size_t u) {
    adj_[u] |= members;
    adj_[u].reset(u);
  });
}

Bitset SimpleGraph::closed_neighborhood(Vertex v) const {
  Bitset b = adj_[v];
  b.set(v);
  return b;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = adj_[u].next(u + 1); v < n_; v = adj_[u].next(v + 1)) out.emplace_back(u, v);
  return out;
}

SimpleGraph SimpleGraph::induced(std::span<const Vertex> vertices) const {
  SimpleGraph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (has_edge(vertices[i], vertices[j])) h.add_edge(i, j);
  return h;
}

SimpleGraph SimpleGraph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) fail(ErrorKind::kInvalidParameter, "permutation size mismatch");
  SimpleGraph h(n_);
  for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

std::string to_string(Distance d) {
  return d.is_infinite() ? "inf" : std::to_string(d.value);
}

std::size_t degree(const SimpleGraph& g, Vertex v) {
  if (v >= g.vertex_count())
    fail(ErrorKind::kOutOfRange, "vertex " + std::to_string(v) + " out of range");
  return g.neighbors(v).count();
}

std::size_t min_degree(const SimpleGraph& g) {
  if (g.vertex_count() == 0) fail(ErrorKind::kInvalidParameter, "min_degree of empty graph");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.neighbors(v).count());
  return best;
}

SimpleGraph complement(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  SimpleGraph h(n);
  for (Vertex u = 0; u < n; ++u) {
    Bitset nb = ~g.neighbors(u);
    nb.reset(u);
    nb.for_each([&](std::size_t v) {
      if (v > u) h.add_edge(u, v);
    });
  }
  return h;
}

std::vector<std::size_t> bfs_distances(const SimpleGraph& g, Vertex source) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> dist(n, Distance::kInfinite);
  Bitset unseen(n);
  unseen.set_all();
  std::vector<Vertex> frontier{source};
  dist[source] = 0;
  unseen.reset(source);
  std::size_t level = 0;
  while (!frontier.empty()) {
    ++level;
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
      Bitset fresh = g.neighbors(u) & unseen;
      fresh.for_each([&](std::size_t v) {
        dist[v] = level;
        unseen.reset(v);
        next.push_back(v);
      });
    }
    frontier = std::move(next);
  }
  return dist;
}

Distance diameter(const SimpleGraph& g) {
  Distance d{0};
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (std::size_t x : bfs_distances(g, s)) {
      if (x == Distance::kInfinite) return Distance{};
      d.value = std::max(d.value, x);
    }
  }
  return d;
}

bool is_connected(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t x) { return x == Distance::kInfinite; });
}

std::size_t edge_connectivity(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) fail(ErrorKind::kInvalidParameter, "edge connectivity needs at least 2 vertices");
  if (!is_connected(g)) return 0;

  // Stoer-Wagner with merged-vertex weights held in a dense matrix.
  std::vector<std::size_t> w(n * n, 0);
  for (auto [u, v] : g.edges()) w[u * n + v] = w[v * n + u] = 1;
  std::vector<Vertex> alive(n);
  for (Vertex v = 0; v < n; ++v) alive[v] = v;

  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> key(n);
  std::vector<char> added(n);
  while (alive.size() > 1) {
    std::fill(key.begin(), key.end(), 0);
    std::fill(added.begin(), added.end(), 0);
    Vertex prev = alive[0];
    Vertex last = alive[0];
    for (std::size_t step = 0; step < alive.size(); ++step) {
      Vertex pick = n;
      for (Vertex v : alive)
        if (!added[v] && (pick == n || key[v] > key[pick])) pick = v;
      added[pick] = 1;
      prev = last;
      last = pick;
      if (step + 1 == alive.size()) best = std::min(best, key[pick]);
      for (Vertex v : alive)
        if (!added[v]) key[v] += w[pick * n + v];
    }
    // merge last into prev
    for (Vertex v : alive) {
      w[prev * n + v] += w[last * n + v];
      w[v * n + prev] = w[prev * n + v];
    }
    w[prev * n + prev] = 0;
    alive.erase(std::find(alive.begin(), alive.end(), last));
  }
  return best;
}

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
  auto e = g.edges();
  out << g.vertex_count() << ' ' << e.size() << '\n';
  for (auto [u, v] : e) out << u << ' ' << v << '\n';
}

SimpleGraph read_edge_list(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) fail(ErrorKind::kParseError, "edge list: missing header 'n m'");
  SimpleGraph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t u = 0, v = 0;
    if (!(in >> u >> v))
      fail(ErrorKind::kParseError, "edge list: expected " + std::to_string(m) + " edges, got " +
                                       std::to_string(i));
    if (u >= v || v >= n)
      fail(ErrorKind::kParseError, "edge list: bad edge " + std::to_string(u) + " " +
                                       std::to_string(v));
    g.add_edge(u, v);
  }
  return g;
}

void write_dot(std::ostream& out, const SimpleGraph& g, std::span<const std::string> labels,
               const std::string& name) {
  out << "graph \"" << name << "\" {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << (v < labels.size() ? labels[v] : std::to_string(v))
        << "\"];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace epg
