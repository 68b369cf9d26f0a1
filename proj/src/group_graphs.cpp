#include "epg/group_graphs.hpp"

namespace epg {

const char* to_string(GraphKind kind) {
  return kind == GraphKind::kPower ? "power" : "enhanced";
}

LabeledGroupGraph enhanced_power_graph(const FiniteGroup& g) {
  return enhanced_power_graph(g, cyclic_subgroups(g));
}

LabeledGroupGraph enhanced_power_graph(const FiniteGroup& g, const CyclicSubgroupSet& subgroups) {
  SimpleGraph graph(g.order());
  // Every cyclic subgroup lies in a maximal one, so the maximal cliques
  // already cover every edge.
  for (const auto& entry : subgroups.entries)
    if (entry.maximal) graph.add_clique(entry.members);
  return {std::move(graph), std::cref(g), GraphKind::kEnhanced};
}

LabeledGroupGraph power_graph(const FiniteGroup& g) {
  SimpleGraph graph(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto gx = static_cast<Element>(x);
    Element acc = gx;
    while (acc != 0) {
      acc = g.mul(acc, gx);
      if (acc != gx) graph.add_edge(x, acc);
    }
  }
  return {std::move(graph), std::cref(g), GraphKind::kPower};
}

bool graphs_coincide(const FiniteGroup& g) {
  return power_graph(g).graph == enhanced_power_graph(g).graph;
}

}  // namespace epg
