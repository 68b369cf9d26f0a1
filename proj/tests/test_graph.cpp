#include <gtest/gtest.h>

#include <limits>
#include <sstream>

#include "epg/families.hpp"
#include "epg/graph.hpp"
#include "epg/group_graphs.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace epg;

TEST(SimpleGraph, EdgesAreSymmetricAndIrreflexive) {
  SimpleGraph g(4);
  g.add_edge(2, 0);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
  g.add_edge(0, 2);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EPG_ERROR(g.add_edge(1, 1), ErrorKind::kInvalidParameter);
  EXPECT_EPG_ERROR(g.add_edge(1, 4), ErrorKind::kOutOfRange);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}}));
}

TEST(SimpleGraph, CliqueAndClosedNeighborhood) {
  SimpleGraph g(5);
  Bitset m(5);
  m.set(1);
  m.set(3);
  m.set(4);
  g.add_clique(m);
  EXPECT_EQ(g.edge_count(), 3u);
  auto n1 = g.closed_neighborhood(1).to_vector();
  EXPECT_EQ(std::vector<std::size_t>(n1.begin(), n1.end()), (std::vector<std::size_t>{1, 3, 4}));
}

TEST(SimpleGraph, InducedAndRelabeled) {
  const auto c5 = oracle::cycle(5);
  const std::vector<Vertex> keep{0, 1, 2};
  const auto p = c5.induced(keep);
  EXPECT_EQ(p.vertex_count(), 3u);
  EXPECT_EQ(p.edge_count(), 2u);

  const std::vector<Vertex> perm{4, 3, 2, 1, 0};
  const auto r = c5.relabeled(perm);
  EXPECT_EQ(r.edge_count(), 5u);
  EXPECT_TRUE(r.has_edge(4, 3));
  EXPECT_TRUE(r.has_edge(0, 4));
  EXPECT_EQ(r.relabeled(perm), c5);
}

TEST(Degree, Examples) {
  const auto k4 = oracle::complete(4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(degree(k4, v), 3u);
  const auto s = oracle::star(3);
  EXPECT_EQ(degree(s, 0), 3u);
  EXPECT_EQ(degree(s, 2), 1u);
  EXPECT_EPG_ERROR(degree(s, 4), ErrorKind::kOutOfRange);

  const auto d6 = make_dihedral(3);
  const auto pe = enhanced_power_graph(d6);
  EXPECT_EQ(degree(pe.graph, 1 + 3), 1u);  // a*b
}

TEST(MinDegree, Examples) {
  EXPECT_EQ(min_degree(SimpleGraph(1)), 0u);
  EXPECT_EQ(min_degree(enhanced_power_graph(make_dihedral(4)).graph), 1u);
  EXPECT_EQ(min_degree(oracle::cycle(5)), 2u);
  EXPECT_EPG_ERROR(min_degree(SimpleGraph(0)), ErrorKind::kInvalidParameter);
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(oracle::complete(6)).edge_count(), 0u);
  // C_5 is self-complementary: 0-2-4-1-3-0 is the complement cycle.
  const auto c = complement(oracle::cycle(5));
  const std::vector<Vertex> perm{0, 2, 4, 1, 3};  // vertex u of C_5 maps to perm[u]
  const auto back = oracle::cycle(5).relabeled(perm);
  EXPECT_EQ(c, back);
}

TEST(Complement, InvolutionAndDegrees) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = oracle::random_graph(17, 0.4, seed);
    const auto c = complement(g);
    EXPECT_EQ(complement(c), g);
    for (Vertex v = 0; v < 17; ++v) EXPECT_EQ(degree(g, v) + degree(c, v), 16u);
  }
}

TEST(Diameter, Examples) {
  EXPECT_EQ(diameter(oracle::complete(4)).value, 1u);
  EXPECT_EQ(diameter(SimpleGraph(1)).value, 0u);
  EXPECT_TRUE(diameter(SimpleGraph(2)).is_infinite());
  EXPECT_FALSE(is_connected(SimpleGraph(2)));
  EXPECT_EQ(diameter(oracle::path(6)).value, 5u);
  EXPECT_EQ(to_string(diameter(SimpleGraph(2))), "inf");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = oracle::random_graph(14, 0.3, seed);
    const auto d = diameter(g);
    const auto expect = oracle::diameter(g);
    if (expect == std::numeric_limits<std::size_t>::max())
      EXPECT_TRUE(d.is_infinite());
    else
      EXPECT_EQ(d.value, expect);
  }
}

TEST(Bfs, Distances) {
  const auto d = bfs_distances(oracle::path(4), 0);
  EXPECT_EQ(d, (std::vector<std::size_t>{0, 1, 2, 3}));
  SimpleGraph g(3);
  g.add_edge(0, 1);
  EXPECT_EQ(bfs_distances(g, 0)[2], Distance::kInfinite);
}

TEST(EdgeConnectivity, Examples) {
  EXPECT_EQ(edge_connectivity(oracle::complete(4)), 3u);
  EXPECT_EQ(edge_connectivity(oracle::star(5)), 1u);
  EXPECT_EQ(edge_connectivity(oracle::cycle(7)), 2u);
  EXPECT_EQ(edge_connectivity(SimpleGraph(3)), 0u);
  EXPECT_EPG_ERROR(edge_connectivity(SimpleGraph(1)), ErrorKind::kInvalidParameter);
  const auto u12 = enhanced_power_graph(make_u6n(2)).graph;
  EXPECT_EQ(edge_connectivity(u12), min_degree(u12));
}

TEST(EdgeConnectivity, MatchesMaxFlowOracle) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto g = oracle::random_graph(12, 0.25 + 0.02 * static_cast<double>(seed), seed);
    EXPECT_EQ(edge_connectivity(g), oracle::edge_connectivity(g)) << seed;
  }
}

TEST(EdgeList, RoundTrip) {
  const auto g = oracle::random_graph(20, 0.3, 7);
  std::stringstream ss;
  write_edge_list(ss, g);
  EXPECT_EQ(read_edge_list(ss), g);
}

TEST(EdgeList, ParseErrors) {
  std::istringstream missing("3");
  EXPECT_EPG_ERROR(read_edge_list(missing), ErrorKind::kParseError);
  std::istringstream short_list("3 2\n0 1\n");
  EXPECT_EPG_ERROR(read_edge_list(short_list), ErrorKind::kParseError);
  std::istringstream bad_vertex("3 1\n0 3\n");
  EXPECT_EPG_ERROR(read_edge_list(bad_vertex), ErrorKind::kParseError);
}

TEST(Dot, UsesLabels) {
  std::ostringstream out;
  const std::vector<std::string> labels{"e", "a"};
  write_dot(out, oracle::complete(2), labels, "K2");
  const auto text = out.str();
  EXPECT_NE(text.find("graph \"K2\""), std::string::npos);
  EXPECT_NE(text.find("label=\"a\""), std::string::npos);
  EXPECT_NE(text.find("0 -- 1"), std::string::npos);
}
