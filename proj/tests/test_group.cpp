#include <gtest/gtest.h>

#include <algorithm>

#include "epg/families.hpp"
#include "epg/group.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace epg;

namespace {

std::vector<Element> cyclic_table(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i * n + j] = static_cast<Element>((i + j) % n);
  return t;
}

}  // namespace

TEST(FiniteGroup, FromTableComputesOrdersAndInverses) {
  const auto g = FiniteGroup::from_table(6, cyclic_table(6), "z6");
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.element_order(2), 3u);
  EXPECT_EQ(g.element_order(1), 6u);
  for (Element x = 0; x < 6; ++x) EXPECT_EQ(g.mul(x, g.inverse(x)), 0u);
  EXPECT_EQ(g.power(1, 4), 4u);
  EXPECT_EQ(g.power(5, 0), 0u);
  EXPECT_TRUE(g.is_abelian());
  EXPECT_EQ(g.family(), Family::kTable);
}

TEST(FiniteGroup, RejectsNonLatinTable) {
  auto t = cyclic_table(4);
  t[5] = t[6];
  EXPECT_EPG_ERROR(FiniteGroup::from_table(4, t, "bad"), ErrorKind::kInvalidParameter);
}

TEST(FiniteGroup, RejectsIdentityNotAtZero) {
  // Z_3 relabeled so that index 1 is the identity.
  std::vector<Element> t{2, 0, 1, 0, 1, 2, 1, 2, 0};
  EXPECT_EPG_ERROR(FiniteGroup::from_table(3, t, "bad"), ErrorKind::kInvalidParameter);
}

TEST(FiniteGroup, RejectsNonAssociativeLatinSquare) {
  // A loop of order 5 with identity 0 that is not a group.
  std::vector<Element> t{0, 1, 2, 3, 4,  //
                         1, 0, 3, 4, 2,  //
                         2, 4, 0, 1, 3,  //
                         3, 2, 4, 0, 1,  //
                         4, 3, 1, 2, 0};
  EXPECT_EPG_ERROR(FiniteGroup::from_table(5, t, "loop"), ErrorKind::kInvalidParameter);
}

TEST(FiniteGroup, RejectsSizeMismatchAndEmpty) {
  EXPECT_EPG_ERROR(FiniteGroup::from_table(3, cyclic_table(2), "bad"), ErrorKind::kInvalidParameter);
  EXPECT_EPG_ERROR(FiniteGroup::from_table(0, {}, "bad"), ErrorKind::kInvalidParameter);
}

TEST(FiniteGroup, SizeCap) {
  const auto saved = size_cap();
  set_size_cap(10);
  EXPECT_EPG_ERROR(make_cyclic(11), ErrorKind::kSizeLimit);
  EXPECT_NO_THROW(make_cyclic(10));
  set_size_cap(saved);
}

TEST(FiniteGroup, CyclicClosureMatchesOracle) {
  const auto g = make_u6n(3);
  for (Element x = 0; x < g.order(); ++x) {
    const auto members = g.cyclic_closure(x).to_vector();
    const auto expect = oracle::cyclic_members(g, x);
    EXPECT_EQ(std::vector<std::uint32_t>(members.begin(), members.end()), expect);
  }
}

TEST(CyclicSubgroups, PrimeOrder) {
  const auto s = cyclic_subgroups(make_cyclic(7));
  EXPECT_EQ(s.entries.size(), 2u);
  EXPECT_EQ(s.maximal_count(), 1u);
}

TEST(CyclicSubgroups, KleinFour) {
  const std::vector<std::uint64_t> parts{2, 2};
  const auto s = cyclic_subgroups(make_abelian(parts));
  EXPECT_EQ(s.entries.size(), 4u);
  EXPECT_EQ(s.maximal_count(), 3u);
}

TEST(CyclicSubgroups, D6HasFourMaximal) {
  const auto g = make_dihedral(3);
  const auto s = cyclic_subgroups(g);
  ASSERT_EQ(s.maximal_count(), 4u);
  std::vector<std::size_t> orders;
  for (auto* c : s.maximal()) orders.push_back(c->order);
  std::sort(orders.begin(), orders.end());
  EXPECT_EQ(orders, (std::vector<std::size_t>{2, 2, 2, 3}));
}

TEST(CyclicSubgroups, Z9OneMaximal) {
  const auto g = make_cyclic(9);
  EXPECT_EQ(exponent(g), 9u);
  EXPECT_EQ(cyclic_subgroups(g).maximal_count(), 1u);
}

TEST(CyclicSubgroups, AgreeWithOracleOnManyGroups) {
  std::vector<FiniteGroup> groups{make_dihedral(6), make_semidihedral(3), make_u6n(6),
                                  make_generalized_quaternion(6), oracle::symmetric_group(4),
                                  oracle::frobenius21(), oracle::heisenberg(3)};
  for (const auto& g : groups) {
    const auto s = cyclic_subgroups(g);
    EXPECT_EQ(s.entries.size(), oracle::all_cyclic_subgroups(g).size()) << g.label();
    std::set<std::vector<std::uint32_t>> lib_max;
    for (auto* c : s.maximal()) {
      auto v = c->members.to_vector();
      lib_max.insert(std::vector<std::uint32_t>(v.begin(), v.end()));
      EXPECT_EQ(c->order, c->members.count());
      EXPECT_EQ(g.element_order(c->generator), c->order);
    }
    const auto expect = oracle::maximal_cyclic_subgroups(g);
    EXPECT_EQ(lib_max, std::set<std::vector<std::uint32_t>>(expect.begin(), expect.end()))
        << g.label();
  }
}

TEST(GroupQueries, InvolutionCount) {
  const std::vector<std::uint64_t> klein{2, 2};
  EXPECT_EQ(involution_count(make_cyclic(9)), 0u);
  EXPECT_EQ(involution_count(make_abelian(klein)), 3u);
  EXPECT_EQ(involution_count(make_generalized_quaternion(2)), 1u);
}

TEST(GroupQueries, Exponent) {
  const std::vector<std::uint64_t> parts{4, 2};
  EXPECT_EQ(exponent(make_cyclic(8)), 8u);
  EXPECT_EQ(exponent(make_abelian(parts)), 4u);
  EXPECT_EQ(exponent(make_dihedral(3)), 6u);
}

TEST(GroupQueries, PrimePowerCyclicSubgroups) {
  EXPECT_FALSE(all_cyclic_subgroups_prime_power(make_cyclic(6)));
  EXPECT_TRUE(all_cyclic_subgroups_prime_power(make_dihedral(3)));
  EXPECT_TRUE(all_cyclic_subgroups_prime_power(make_generalized_quaternion(2)));
}

TEST(GroupQueries, IsPGroup) {
  EXPECT_TRUE(is_p_group(make_cyclic(1)));
  EXPECT_TRUE(is_p_group(make_dihedral(4)));
  EXPECT_FALSE(is_p_group(make_dihedral(3)));
  EXPECT_TRUE(is_p_group(oracle::heisenberg(5)));
}
