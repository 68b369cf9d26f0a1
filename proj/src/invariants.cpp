#include "epg/invariants.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "epg/error.hpp"

namespace epg {

namespace {

[[noreturn]] void budget_exceeded(const char* what, std::uint64_t budget) {
  fail(ErrorKind::kBudgetExceeded,
       std::string(what) + ": node budget of " + std::to_string(budget) + " exceeded");
}

// Relabels so that bit order follows descending degree (ties by index).
class CliqueSearch {
 public:
  CliqueSearch(const SimpleGraph& g, std::uint64_t budget) : n_(g.vertex_count()), budget_(budget) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return g.neighbors(a).count() > g.neighbors(b).count();
    });
    std::vector<Vertex> rank(n_);
    for (std::size_t i = 0; i < n_; ++i) rank[order_[i]] = i;
    adj_.assign(n_, Bitset(n_));
    for (auto [u, v] : g.edges()) {
      adj_[rank[u]].set(rank[v]);
      adj_[rank[v]].set(rank[u]);
    }
  }

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    Bitset all(n_);
    all.set_all();
    expand(all);
    std::vector<Vertex> out;
    for (Vertex v : best_) out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void expand(Bitset candidates) {
    if (++nodes_ > budget_) budget_exceeded("max_clique", budget_);
    std::vector<Vertex> verts;
    std::vector<std::size_t> colors;
    color_sort(candidates, verts, colors);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current_.size() + colors[i] <= best_.size()) return;
      const Vertex v = verts[i];
      current_.push_back(v);
      Bitset child = candidates & adj_[v];
      if (child.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(child));
      }
      current_.pop_back();
      candidates.reset(v);
    }
  }

  // Greedy sequential colouring; colors[i] bounds the clique size within
  // verts[0..i].
  void color_sort(const Bitset& candidates, std::vector<Vertex>& verts,
                  std::vector<std::size_t>& colors) const {
    Bitset uncolored = candidates;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset open = uncolored;
      while (open.any()) {
        const Vertex v = open.first();
        open.reset(v);
        open -= adj_[v];
        uncolored.reset(v);
        verts.push_back(v);
        colors.push_back(color);
      }
    }
  }

  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::vector<Bitset> adj_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

class Blossom {
 public:
  explicit Blossom(const SimpleGraph& g) : n_(g.vertex_count()), adj_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      auto nb = g.neighbors(v).to_vector();
      adj_[v].assign(nb.begin(), nb.end());
    }
    match_.assign(n_, kNone);
  }

  std::vector<std::size_t> run() {
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      for (Vertex u : adj_[v])
        if (match_[u] == kNone) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      Vertex u = find_path(v);
      while (u != kNone) {
        const Vertex pv = parent_[u];
        const Vertex ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    return match_;
  }

  static constexpr std::size_t kNone = Distance::kInfinite;

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    used_.assign(n_, 0);
    parent_.assign(n_, kNone);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), Vertex{0});
    std::queue<Vertex> q;
    used_[root] = 1;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const Vertex cur = lca(v, to);
          in_blossom_.assign(n_, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = 1;
              q.push(i);
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return kNone;
  }

  std::size_t n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::size_t> match_;
  std::vector<std::size_t> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

class ColoringSearch {
 public:
  ColoringSearch(const SimpleGraph& g, std::uint64_t budget)
      : g_(g), n_(g.vertex_count()), budget_(budget), color_(n_, kUncolored) {}

  std::size_t run(std::size_t lower) {
    best_ = n_ + 1;
    lower_ = lower;
    search(0, 0);
    return best_;
  }

 private:
  static constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);

  // DSATUR choice: most distinct neighbour colours, then highest degree.
  Vertex pick() const {
    Vertex best = n_;
    std::size_t best_sat = 0, best_deg = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != kUncolored) continue;
      std::vector<char> seen(n_, 0);
      std::size_t sat = 0;
      g_.neighbors(v).for_each([&](std::size_t u) {
        if (color_[u] != kUncolored && !seen[color_[u]]) {
          seen[color_[u]] = 1;
          ++sat;
        }
      });
      const std::size_t deg = g_.neighbors(v).count();
      if (best == n_ || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  void search(std::size_t colored, std::size_t used) {
    if (++nodes_ > budget_) budget_exceeded("chromatic_number", budget_);
    if (used >= best_) return;
    if (colored == n_) {
      best_ = used;
      return;
    }
    const Vertex v = pick();
    const std::size_t limit = std::min(used + 1, best_ - 1);
    for (std::size_t c = 0; c < limit; ++c) {
      bool clash = false;
      g_.neighbors(v).for_each([&](std::size_t u) { clash = clash || color_[u] == c; });
      if (clash) continue;
      color_[v] = c;
      search(colored + 1, std::max(used, c + 1));
      color_[v] = kUncolored;
      if (best_ == lower_) return;
    }
  }

  const SimpleGraph& g_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t best_ = 0;
  std::size_t lower_ = 0;
  std::vector<std::size_t> color_;
};

class HoleSearch {
 public:
  HoleSearch(const SimpleGraph& g, std::size_t max_len, std::uint64_t budget)
      : g_(g), n_(g.vertex_count()), max_len_(max_len), budget_(budget) {}

  CycleSearchResult run() {
    CycleSearchResult result;
    for (Vertex v0 = 0; v0 < n_ && !done_; ++v0) {
      higher_ = Bitset(n_);
      for (Vertex u = v0 + 1; u < n_; ++u) higher_.set(u);
      Bitset first = g_.neighbors(v0) & higher_;
      for (Vertex v1 = first.first(); v1 < n_ && !done_; v1 = first.next(v1 + 1)) {
        path_ = {v0, v1};
        extend(Bitset(n_));
      }
    }
    result.nodes = nodes_;
    if (found_) {
      result.status = CycleSearchStatus::kFound;
      result.cycle = path_;
    } else {
      result.status = over_budget_ ? CycleSearchStatus::kBudgetExceeded : CycleSearchStatus::kNone;
    }
    return result;
  }

 private:
  // path_ is an induced path v0..vm with all vertices above v0; interior is
  // the union of closed neighbourhoods of v1..v(m-1).
  void extend(const Bitset& interior) {
    if (++nodes_ > budget_) {
      over_budget_ = done_ = true;
      return;
    }
    const Vertex v0 = path_.front();
    const Vertex last = path_.back();
    const std::size_t m = path_.size() - 1;
    Bitset cand = g_.neighbors(last) & higher_;
    cand -= interior;
    for (Vertex w = cand.first(); w < n_ && !done_; w = cand.next(w + 1)) {
      if (g_.has_edge(w, v0)) {
        const std::size_t len = m + 2;
        if (len >= 5 && len % 2 == 1 && len <= max_len_ && path_[1] < w) {
          path_.push_back(w);
          found_ = done_ = true;
          return;
        }
        continue;
      }
      if (m + 3 > max_len_) continue;
      path_.push_back(w);
      extend(interior | g_.closed_neighborhood(last));
      if (done_) return;
      path_.pop_back();
    }
  }

  const SimpleGraph& g_;
  std::size_t n_;
  std::size_t max_len_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool done_ = false;
  bool found_ = false;
  bool over_budget_ = false;
  Bitset higher_;
  std::vector<Vertex> path_;
};

}  // namespace

std::vector<Vertex> find_max_clique(const SimpleGraph& g, std::uint64_t node_budget) {
  return CliqueSearch(g, node_budget).run();
}

std::size_t max_clique(const SimpleGraph& g, std::uint64_t node_budget) {
  if (g.vertex_count() == 0) fail(ErrorKind::kInvalidParameter, "max_clique of empty graph");
  return find_max_clique(g, node_budget).size();
}

std::size_t independence_number(const SimpleGraph& g, std::uint64_t node_budget) {
  return max_clique(complement(g), node_budget);
}

std::vector<std::size_t> maximum_matching_mates(const SimpleGraph& g) {
  return Blossom(g).run();
}

std::size_t maximum_matching(const SimpleGraph& g) {
  auto mates = maximum_matching_mates(g);
  std::size_t matched = 0;
  for (std::size_t m : mates) matched += m != Blossom::kNone ? 1 : 0;
  return matched / 2;
}

std::size_t chromatic_number(const SimpleGraph& g, std::size_t vertex_bound) {
  if (g.vertex_count() > vertex_bound)
    fail(ErrorKind::kBudgetExceeded, "chromatic_number: " + std::to_string(g.vertex_count()) +
                                         " vertices exceeds bound " +
                                         std::to_string(vertex_bound));
  if (g.vertex_count() == 0) return 0;
  const std::size_t lower = max_clique(g);
  return ColoringSearch(g, kDefaultNodeBudget).run(lower);
}

bool is_induced_cycle(const SimpleGraph& g, const std::vector<Vertex>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 3) return false;
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j) {
      if (cycle[i] == cycle[j]) return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

CycleSearchResult find_odd_hole(const SimpleGraph& g, std::size_t max_len,
                                std::uint64_t node_budget) {
  if (max_len < 5 || max_len % 2 == 0)
    fail(ErrorKind::kInvalidParameter, "max_len must be odd and at least 5");
  auto result = HoleSearch(g, max_len, node_budget).run();
  if (result.status == CycleSearchStatus::kFound && !is_induced_cycle(g, result.cycle))
    fail(ErrorKind::kInternalError, "hole search returned a non-induced cycle");
  return result;
}

CycleSearchResult find_odd_antihole(const SimpleGraph& g, std::size_t max_len,
                                    std::uint64_t node_budget) {
  return find_odd_hole(complement(g), max_len, node_budget);
}

NeighborhoodPartition closed_neighborhood_partition(const SimpleGraph& g) {
  NeighborhoodPartition p;
  p.class_of.resize(g.vertex_count());
  std::unordered_map<Bitset, std::size_t, BitsetHash> index;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto [it, fresh] = index.try_emplace(g.closed_neighborhood(v), p.classes.size());
    if (fresh) p.classes.emplace_back();
    p.classes[it->second].push_back(v);
    p.class_of[v] = it->second;
  }
  return p;
}

SimpleGraph quotient_graph(const SimpleGraph& g, const NeighborhoodPartition& p) {
  const std::size_t n = g.vertex_count();
  if (p.class_of.size() != n) fail(ErrorKind::kInvalidParameter, "partition size mismatch");
  std::size_t covered = 0;
  for (std::size_t c = 0; c < p.classes.size(); ++c) {
    if (p.classes[c].empty()) fail(ErrorKind::kInvalidParameter, "empty partition class");
    const Bitset rep = g.closed_neighborhood(p.classes[c].front());
    for (Vertex v : p.classes[c]) {
      if (v >= n || p.class_of[v] != c || !(g.closed_neighborhood(v) == rep))
        fail(ErrorKind::kInvalidParameter, "partition does not match the graph");
      ++covered;
    }
  }
  if (covered != n) fail(ErrorKind::kInvalidParameter, "partition does not cover the graph");

  SimpleGraph q(p.classes.size());
  for (std::size_t a = 0; a < p.classes.size(); ++a)
    for (std::size_t b = a + 1; b < p.classes.size(); ++b)
      if (g.has_edge(p.classes[a].front(), p.classes[b].front())) q.add_edge(a, b);
  return q;
}

std::size_t strong_metric_dimension(const SimpleGraph& g, std::uint64_t node_budget) {
  const std::size_t n = g.vertex_count();
  if (n == 0) fail(ErrorKind::kInvalidParameter, "strong metric dimension of empty graph");
  const Distance d = diameter(g);
  if (d.is_infinite() || d.value > 2)
    fail(ErrorKind::kUnsupportedDiameter,
         "strong metric dimension needs diameter <= 2, got " + to_string(d));
  if (d.value <= 1) return n - 1;
  return n - max_clique(quotient_graph(g, closed_neighborhood_partition(g)), node_budget);
}

std::size_t strong_resolving_oracle(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kStrongResolvingMaxVertices)
    fail(ErrorKind::kBudgetExceeded, "strong_resolving_oracle supports at most " +
                                         std::to_string(kStrongResolvingMaxVertices) +
                                         " vertices");
  if (n <= 1) return 0;
  if (!is_connected(g))
    fail(ErrorKind::kUnsupportedDiameter, "strong resolving sets need a connected graph");

  std::vector<std::vector<std::size_t>> dist(n);
  for (Vertex v = 0; v < n; ++v) dist[v] = bfs_distances(g, v);

  // z strongly resolves u, v iff u lies on a shortest z-v path or v lies on
  // a shortest z-u path.
  std::vector<std::uint32_t> resolvers;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      std::uint32_t mask = 0;
      for (Vertex z = 0; z < n; ++z)
        if (dist[z][v] == dist[z][u] + dist[u][v] || dist[z][u] == dist[z][v] + dist[v][u])
          mask |= std::uint32_t{1} << z;
      resolvers.push_back(mask);
    }

  std::size_t best = n;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size >= best) continue;
    bool ok = std::all_of(resolvers.begin(), resolvers.end(),
                          [s](std::uint32_t m) { return (m & s) != 0; });
    if (ok) best = size;
  }
  return best;
}

}  // namespace epg
