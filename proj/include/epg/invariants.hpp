#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "epg/graph.hpp"

namespace epg {

// Exact graph invariants. Every search that can blow up takes a node
// budget and throws Error(kBudgetExceeded) when it runs out.

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;
inline constexpr std::size_t kDefaultChromaticBound = 24;
inline constexpr std::size_t kDefaultHoleMaxLen = 9;
inline constexpr std::size_t kStrongResolvingMaxVertices = 12;

// Clique number by bitset branch and bound with a greedy-colouring bound.
// Vertices are explored in descending degree order.
std::size_t max_clique(const SimpleGraph& g, std::uint64_t node_budget = kDefaultNodeBudget);

// Vertices of one maximum clique.
std::vector<Vertex> find_max_clique(const SimpleGraph& g,
                                    std::uint64_t node_budget = kDefaultNodeBudget);

std::size_t independence_number(const SimpleGraph& g,
                                std::uint64_t node_budget = kDefaultNodeBudget);

// Maximum matching in a general graph (Edmonds' blossom algorithm).
std::size_t maximum_matching(const SimpleGraph& g);

// mate[v] is v's partner or Distance::kInfinite when unmatched.
std::vector<std::size_t> maximum_matching_mates(const SimpleGraph& g);

std::size_t chromatic_number(const SimpleGraph& g, std::size_t vertex_bound = kDefaultChromaticBound);

enum class CycleSearchStatus { kFound, kNone, kBudgetExceeded };

struct CycleSearchResult {
  CycleSearchStatus status = CycleSearchStatus::kNone;
  std::vector<Vertex> cycle;  // in cyclic order when found
  std::uint64_t nodes = 0;
};

// Searches for an induced (chordless) odd cycle of length 5..max_len.
// max_len must be odd and >= 5. A returned cycle has been re-verified as
// induced. Budget exhaustion is reported as a status, not an exception.
CycleSearchResult find_odd_hole(const SimpleGraph& g, std::size_t max_len = kDefaultHoleMaxLen,
                                std::uint64_t node_budget = kDefaultNodeBudget);

// find_odd_hole on the complement; the returned cycle is an antihole of g.
CycleSearchResult find_odd_antihole(const SimpleGraph& g,
                                    std::size_t max_len = kDefaultHoleMaxLen,
                                    std::uint64_t node_budget = kDefaultNodeBudget);

// True iff cycle (in order) induces a chordless cycle in g.
bool is_induced_cycle(const SimpleGraph& g, const std::vector<Vertex>& cycle);

// Classes of the relation N[u] = N[v]. Classes are ordered by their
// smallest vertex, and members within a class ascend.
struct NeighborhoodPartition {
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::size_t> class_of;
};

NeighborhoodPartition closed_neighborhood_partition(const SimpleGraph& g);

// One vertex per class, adjacent iff representatives are adjacent.
SimpleGraph quotient_graph(const SimpleGraph& g, const NeighborhoodPartition& p);

// |V| - omega(quotient by closed-neighbourhood classes); valid for
// diameter <= 2. Larger or infinite diameter raises kUnsupportedDiameter.
std::size_t strong_metric_dimension(const SimpleGraph& g,
                                    std::uint64_t node_budget = kDefaultNodeBudget);

// Smallest strong resolving set by exhaustive subset search (n <= 12).
std::size_t strong_resolving_oracle(const SimpleGraph& g);

}  // namespace epg
