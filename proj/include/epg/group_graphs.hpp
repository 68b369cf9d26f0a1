#pragma once

#include <functional>

#include "epg/graph.hpp"
#include "epg/group.hpp"

namespace epg {

enum class GraphKind { kPower, kEnhanced };

const char* to_string(GraphKind kind);

// Vertex i is element i of the source group. The group must outlive the
// graph.
struct LabeledGroupGraph {
  SimpleGraph graph;
  std::reference_wrapper<const FiniteGroup> group;
  GraphKind kind;
};

// x ~ y iff some cyclic subgroup contains both.
LabeledGroupGraph enhanced_power_graph(const FiniteGroup& g);
LabeledGroupGraph enhanced_power_graph(const FiniteGroup& g, const CyclicSubgroupSet& subgroups);

// x ~ y iff one is a power of the other.
LabeledGroupGraph power_graph(const FiniteGroup& g);

// True iff the power graph and the enhanced power graph have the same edges.
bool graphs_coincide(const FiniteGroup& g);

}  // namespace epg
