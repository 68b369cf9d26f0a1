#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "epg/families.hpp"
#include "epg/group_graphs.hpp"
#include "epg/invariants.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace epg;

namespace {

SimpleGraph pe(const FiniteGroup& g) { return enhanced_power_graph(g).graph; }

std::vector<std::uint64_t> klein() { return {2, 2}; }

}  // namespace

TEST(MaxClique, Examples) {
  EXPECT_EQ(max_clique(oracle::complete(5)), 5u);
  EXPECT_EQ(max_clique(oracle::cycle(5)), 2u);
  EXPECT_EQ(max_clique(SimpleGraph(3)), 1u);
  EXPECT_EPG_ERROR(max_clique(SimpleGraph(0)), ErrorKind::kInvalidParameter);
}

TEST(MaxClique, RandomGraphsAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = oracle::random_graph(30, 0.2 + 0.015 * static_cast<double>(seed), seed);
    const auto w = max_clique(g);
    EXPECT_EQ(w, oracle::clique_number(g)) << seed;
    const auto c = find_max_clique(g);
    ASSERT_EQ(c.size(), w);
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_TRUE(g.has_edge(c[i], c[j]));
  }
}

TEST(MaxClique, BudgetExceeded) {
  const auto g = oracle::random_graph(120, 0.7, 3);
  EXPECT_EPG_ERROR(max_clique(g, 5), ErrorKind::kBudgetExceeded);
}

TEST(Independence, Examples) {
  EXPECT_EQ(independence_number(SimpleGraph(6)), 6u);
  EXPECT_EQ(independence_number(pe(make_dihedral(5))), 6u);
  EXPECT_EQ(independence_number(pe(make_abelian(klein()))), 3u);
}

TEST(Independence, RandomGraphsAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = oracle::random_graph(28, 0.15 + 0.02 * static_cast<double>(seed), 100 + seed);
    EXPECT_EQ(independence_number(g), oracle::independence_number(g)) << seed;
  }
}

TEST(Matching, Examples) {
  EXPECT_EQ(maximum_matching(oracle::complete(4)), 2u);
  EXPECT_EQ(maximum_matching(pe(make_cyclic(9))), 4u);
  EXPECT_EQ(maximum_matching(oracle::cycle(5)), 2u);
  EXPECT_EQ(maximum_matching(SimpleGraph(0)), 0u);
}

TEST(Matching, RandomGraphsAgainstBitmaskDp) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = oracle::random_graph(16, 0.08 + 0.01 * static_cast<double>(seed), 200 + seed);
    const auto m = maximum_matching(g);
    EXPECT_EQ(m, oracle::matching_number(g)) << seed;
    // The mates must describe a valid matching of the same size.
    const auto mate = maximum_matching_mates(g);
    std::size_t matched = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (mate[v] == Distance::kInfinite) continue;
      ++matched;
      EXPECT_TRUE(g.has_edge(v, mate[v]));
      EXPECT_EQ(mate[mate[v]], v);
    }
    EXPECT_EQ(matched, 2 * m);
  }
}

// Blossoms: odd cycles joined by bridges need contraction to be solved.
TEST(Matching, BlossomHeavyGraphs) {
  SimpleGraph g(10);
  for (Vertex base : {0, 5})
    for (Vertex i = 0; i < 5; ++i) g.add_edge(base + i, base + (i + 1) % 5);
  g.add_edge(2, 7);
  EXPECT_EQ(maximum_matching(g), 5u);
  EXPECT_EQ(oracle::matching_number(g), 5u);
}

TEST(Matching, InvariantUnderRelabeling) {
  const auto g = pe(make_u6n(4));
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(5);
  for (int round = 0; round < 5; ++round) {
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(maximum_matching(g.relabeled(perm)), maximum_matching(g));
  }
}

TEST(Chromatic, Examples) {
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(chromatic_number(oracle::complete(n)), n);
  EXPECT_EQ(chromatic_number(oracle::cycle(5)), 3u);
  EXPECT_EQ(chromatic_number(oracle::cycle(6)), 2u);
  EXPECT_EPG_ERROR(chromatic_number(oracle::complete(8), 5), ErrorKind::kBudgetExceeded);
}

TEST(Chromatic, RandomGraphsAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = oracle::random_graph(9, 0.45, 300 + seed);
    EXPECT_EQ(chromatic_number(g), oracle::chromatic_number(g)) << seed;
  }
}

// Induced subgraphs of P_e(SD_16): chromatic number equals clique number.
TEST(Chromatic, SemidihedralInducedSubgraphsArePerfect) {
  const auto g = pe(make_semidihedral(2));
  std::mt19937_64 rng(11);
  for (int round = 0; round < 40; ++round) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (rng() % 2) keep.push_back(v);
    if (keep.empty()) continue;
    const auto h = g.induced(keep);
    EXPECT_EQ(chromatic_number(h), max_clique(h));
  }
}

TEST(OddHole, Examples) {
  const auto c5 = find_odd_hole(oracle::cycle(5));
  ASSERT_EQ(c5.status, CycleSearchStatus::kFound);
  EXPECT_EQ(c5.cycle.size(), 5u);
  EXPECT_TRUE(is_induced_cycle(oracle::cycle(5), c5.cycle));
  EXPECT_EQ(find_odd_hole(oracle::cycle(6)).status, CycleSearchStatus::kNone);
  EXPECT_EQ(find_odd_hole(oracle::cycle(11), 9).status, CycleSearchStatus::kNone);
  EXPECT_EQ(find_odd_hole(oracle::cycle(11), 11).status, CycleSearchStatus::kFound);
  EXPECT_EPG_ERROR(find_odd_hole(oracle::cycle(5), 6), ErrorKind::kInvalidParameter);
  EXPECT_EPG_ERROR(find_odd_hole(oracle::cycle(5), 3), ErrorKind::kInvalidParameter);
}

TEST(OddHole, U6nHasNone) {
  for (std::uint64_t n = 1; n <= 6; ++n)
    EXPECT_EQ(find_odd_hole(pe(make_u6n(n)), 9).status, CycleSearchStatus::kNone) << n;
}

TEST(OddHole, RandomGraphsAgainstSubsetOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = oracle::random_graph(12, 0.3, 400 + seed);
    const auto r = find_odd_hole(g, 9);
    EXPECT_EQ(r.status == CycleSearchStatus::kFound, oracle::has_odd_hole(g, 9)) << seed;
    if (r.status == CycleSearchStatus::kFound) EXPECT_TRUE(is_induced_cycle(g, r.cycle));
  }
}

TEST(OddHole, BudgetIsReportedNotThrown) {
  const auto g = oracle::random_graph(60, 0.3, 9);
  const auto r = find_odd_hole(g, 9, 3);
  EXPECT_EQ(r.status, CycleSearchStatus::kBudgetExceeded);
}

TEST(OddAntihole, Examples) {
  const auto c7bar = complement(oracle::cycle(7));
  const auto r = find_odd_antihole(c7bar);
  ASSERT_EQ(r.status, CycleSearchStatus::kFound);
  EXPECT_EQ(r.cycle.size(), 7u);
  EXPECT_TRUE(is_induced_cycle(complement(c7bar), r.cycle));
  EXPECT_EQ(find_odd_antihole(oracle::complete(8)).status, CycleSearchStatus::kNone);
  for (std::uint64_t n = 2; n <= 10; ++n)
    EXPECT_EQ(find_odd_antihole(pe(make_dihedral(n)), 9).status, CycleSearchStatus::kNone) << n;
}

TEST(InducedCycle, Checks) {
  const auto c6 = oracle::cycle(6);
  EXPECT_TRUE(is_induced_cycle(c6, {0, 1, 2, 3, 4, 5}));
  EXPECT_FALSE(is_induced_cycle(c6, {0, 1, 2}));
  auto chorded = c6;
  chorded.add_edge(0, 3);
  EXPECT_FALSE(is_induced_cycle(chorded, {0, 1, 2, 3, 4, 5}));
}

TEST(NeighborhoodPartition, Examples) {
  EXPECT_EQ(closed_neighborhood_partition(oracle::complete(5)).classes.size(), 1u);

  // D_2n: {e}, <a> minus e, each reflection alone.
  for (std::uint64_t n = 3; n <= 8; ++n) {
    const auto p = closed_neighborhood_partition(pe(make_dihedral(n)));
    ASSERT_EQ(p.classes.size(), n + 2) << n;
    EXPECT_EQ(p.classes[0], (std::vector<Vertex>{0}));
    std::vector<Vertex> rotations(n - 1);
    std::iota(rotations.begin(), rotations.end(), 1);
    EXPECT_EQ(p.classes[1], rotations);
  }

  // SD_16: {e}, {a^4}, <a> minus those, each {a^(2i) b}, each {a^(2j+1) b, a^(4+2j+1) b}.
  const auto p = closed_neighborhood_partition(pe(make_semidihedral(2)));
  std::vector<std::vector<Vertex>> expect{{0}, {1, 2, 3, 5, 6, 7}, {4}};
  for (Vertex i = 0; i < 8; i += 2) expect.push_back({8 + i});
  for (Vertex j = 0; j < 2; ++j) expect.push_back({8 + 2 * j + 1, 8 + 4 + 2 * j + 1});
  auto got = p.classes;
  std::sort(got.begin(), got.end());
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(got, expect);
  for (std::size_t c = 0; c < p.classes.size(); ++c)
    for (auto v : p.classes[c]) EXPECT_EQ(p.class_of[v], c);
}

TEST(QuotientGraph, Examples) {
  const auto k = oracle::complete(6);
  EXPECT_EQ(quotient_graph(k, closed_neighborhood_partition(k)), SimpleGraph(1));

  for (std::uint64_t n = 3; n <= 8; ++n) {
    const auto g = pe(make_dihedral(n));
    const auto q = quotient_graph(g, closed_neighborhood_partition(g));
    // Star K_{1,n+1} centred on the identity class.
    EXPECT_EQ(q.vertex_count(), n + 2);
    EXPECT_EQ(q.edge_count(), n + 1);
    EXPECT_EQ(degree(q, 0), n + 1);
  }

  // SD_8n: e is universal, a^2n misses only the involution classes
  // {a^(2i) b}, and the clique number is 3.
  for (std::uint64_t n = 2; n <= 4; ++n) {
    const auto g = pe(make_semidihedral(n));
    const auto p = closed_neighborhood_partition(g);
    const auto q = quotient_graph(g, p);
    EXPECT_EQ(q.vertex_count(), 3 * n + 3);
    EXPECT_EQ(degree(q, p.class_of[0]), q.vertex_count() - 1);
    EXPECT_EQ(degree(q, p.class_of[2 * n]), q.vertex_count() - 1 - 2 * n);
    EXPECT_EQ(max_clique(q), 3u);
  }
}

TEST(QuotientGraph, RejectsMismatchedPartition) {
  const auto g = oracle::cycle(5);
  auto p = closed_neighborhood_partition(oracle::complete(5));
  EXPECT_EPG_ERROR(quotient_graph(g, p), ErrorKind::kInvalidParameter);
  p.class_of.pop_back();
  EXPECT_EPG_ERROR(quotient_graph(g, p), ErrorKind::kInvalidParameter);
}

TEST(StrongMetricDimension, Examples) {
  EXPECT_EQ(strong_metric_dimension(oracle::complete(7)), 6u);
  EXPECT_EQ(strong_metric_dimension(pe(make_abelian(klein()))), 2u);
  EXPECT_EQ(strong_metric_dimension(pe(make_semidihedral(2))), 13u);
  EXPECT_EPG_ERROR(strong_metric_dimension(oracle::path(5)), ErrorKind::kUnsupportedDiameter);
  EXPECT_EPG_ERROR(strong_metric_dimension(SimpleGraph(3)), ErrorKind::kUnsupportedDiameter);
}

TEST(StrongResolving, Examples) {
  EXPECT_EQ(strong_resolving_oracle(oracle::complete(3)), 2u);
  EXPECT_EQ(strong_resolving_oracle(oracle::path(5)), oracle::strong_resolving_number(oracle::path(5)));
  EXPECT_EQ(strong_resolving_oracle(pe(make_abelian(klein()))), 2u);
  EXPECT_EPG_ERROR(strong_resolving_oracle(oracle::complete(13)), ErrorKind::kBudgetExceeded);
}

// On diameter-2 graphs the quotient-clique value equals exhaustive search.
TEST(StrongResolving, AgreesWithQuotientOnDiameterTwo) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 80 && checked < 25; ++seed) {
    const auto g = oracle::random_graph(10, 0.55, 500 + seed);
    const auto d = diameter(g);
    if (d.is_infinite() || d.value > 2) continue;
    ++checked;
    const auto exact = oracle::strong_resolving_number(g);
    EXPECT_EQ(strong_resolving_oracle(g), exact) << seed;
    EXPECT_EQ(strong_metric_dimension(g), exact) << seed;
  }
  EXPECT_GE(checked, 10u);
}
