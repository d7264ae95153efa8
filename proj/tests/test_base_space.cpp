#include <gtest/gtest.h>

#include "fuzzytop/base_space.hpp"
#include "fuzzytop/random.hpp"
#include "support.hpp"

using namespace fuzzytop;
using fuzzytop::testing::abc;
using fuzzytop::testing::constants;
using fuzzytop::testing::q;

namespace {

FuzzyTopology generated(const GroundRef& g, std::vector<FuzzySet> gens) { return fz_generate_topology(g, gens); }

std::set<std::set<std::string>> named_opens(const FiniteTopology& ft) {
  std::set<std::set<std::string>> out;
  for (ElementBits s : ft.opens()) {
    const auto n = ft.names(s);
    out.insert(std::set<std::string>(n.begin(), n.end()));
  }
  return out;
}

std::set<std::set<std::string>> as_sets(const std::vector<std::vector<std::string>>& parts) {
  std::set<std::set<std::string>> out;
  for (const auto& p : parts) out.insert(std::set<std::string>(p.begin(), p.end()));
  return out;
}

// Independent oracle: the initial topology of all threshold sets T^-1((gamma,1]),
// with gamma on a fine grid, closed under union and intersection by brute force.
std::set<ElementBits> threshold_topology(const FuzzyTopology& topo, long den) {
  std::set<ElementBits> family;
  for (const auto& o : topo.opens()) {
    for (long k = -den; k < den; ++k) {
      ElementBits s = 0;
      for (std::size_t i = 0; i < o.set.size(); ++i) {
        if (o.set.at(i) > Rational(k, den)) s |= ElementBits{1} << i;
      }
      family.insert(s);
    }
  }
  const ElementBits full = (ElementBits{1} << topo.ground()->size()) - 1;
  family.insert(0);
  family.insert(full);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<ElementBits> cur(family.begin(), family.end());
    for (ElementBits a : cur) {
      for (ElementBits b : cur) grew = family.insert(a & b).second || grew, grew = family.insert(a | b).second || grew;
    }
  }
  return family;
}

// Union-find over the relation "y lies in the minimal open of x".
std::set<std::set<std::string>> oracle_components(const FiniteTopology& ft) {
  const std::size_t n = ft.ground()->size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if ((ft.minimal_open(x) >> y) & 1U) parent[find(x)] = find(y);
    }
  }
  std::map<std::size_t, std::set<std::string>> groups;
  for (std::size_t x = 0; x < n; ++x) groups[find(x)].insert(ft.ground()->name(x));
  std::set<std::set<std::string>> out;
  for (auto& [root, members] : groups) out.insert(members);
  return out;
}

}  // namespace

TEST(IotaX, Examples) {
  const GroundRef g = abc(2);
  EXPECT_EQ(named_opens(iota_x(constants(g, {{"p", "1/3"}, {"r", "2/3"}}))),
            (std::set<std::set<std::string>>{{}, {"a", "b"}}));
  EXPECT_EQ(named_opens(iota_x(generated(g, {fz_indicator({"a"}, g)}))),
            (std::set<std::set<std::string>>{{}, {"a"}, {"a", "b"}}));
  EXPECT_EQ(named_opens(iota_x(constants(g, {}))), (std::set<std::set<std::string>>{{}, {"a", "b"}}));
}

TEST(IotaX, MatchesThresholdOracle) {
  Gen gen(31);
  for (int rep = 0; rep < 120; ++rep) {
    const GroundRef g = gen.ground(5);
    const FuzzyTopology topo = gen.topology(g, 3, 12);
    EXPECT_EQ(iota_x(topo).opens(), threshold_topology(topo, 288));
  }
}

TEST(SliceAgrees, ExamplesAndRandom) {
  const GroundRef g = abc(2);
  EXPECT_TRUE(slice_agrees(constants(g, {{"T", "1/3"}})));
  EXPECT_TRUE(slice_agrees(generated(g, {fz_indicator({"a"}, g)})));
  Gen gen(32);
  for (int rep = 0; rep < 100; ++rep) {
    const GroundRef h = gen.ground(6);
    EXPECT_TRUE(slice_agrees(gen.topology(h, 4, 32)));
  }
}

TEST(Components, Examples) {
  const GroundRef g = abc(2);
  const ElementBits a = 1, full = 3;
  EXPECT_EQ(connected_components(FiniteTopology::generated_by(g, {a})).size(), 1U);
  EXPECT_EQ(connected_components(FiniteTopology::generated_by(g, {1, 2})).size(), 2U);
  EXPECT_EQ(connected_components(FiniteTopology::generated_by(abc(3), {})).size(), 1U);
  EXPECT_TRUE(FiniteTopology::generated_by(g, {a}).is_open(full));
}

TEST(Components, MatchOracle) {
  Gen gen(33);
  for (int rep = 0; rep < 150; ++rep) {
    const GroundRef g = gen.ground(6);
    const FiniteTopology ft = iota_x(gen.topology(g, 4, 4));
    EXPECT_EQ(as_sets(connected_components(ft)), oracle_components(ft));
  }
}

TEST(Specialization, PreorderFromMinimalOpens) {
  const GroundRef g = abc(3);
  // Opens form the chain {} < {a} < {a,b} < X, so c <= b <= a.
  const FiniteTopology ft = FiniteTopology::generated_by(g, {1, 3});
  const SpecializationPreorder pre(ft);
  EXPECT_TRUE(pre.leq(2, 1));
  EXPECT_TRUE(pre.leq(1, 0));
  EXPECT_FALSE(pre.leq(0, 1));
  const auto fence = pre.fence(0, 2);
  ASSERT_TRUE(fence.has_value());
  EXPECT_EQ(fence->front(), 0U);
  EXPECT_EQ(fence->back(), 2U);
  for (std::size_t i = 0; i + 1 < fence->size(); ++i) EXPECT_TRUE(pre.comparable((*fence)[i], (*fence)[i + 1]));

  const SpecializationPreorder discrete(FiniteTopology::generated_by(abc(2), {1, 2}));
  EXPECT_FALSE(discrete.fence(0, 1).has_value());
}

TEST(Connectivity, Examples) {
  const GroundRef g = abc(2);
  const ConnectivityReport c = check_pc_lpc(constants(g, {{"T", "1/3"}}));
  EXPECT_TRUE(c.pc);
  EXPECT_TRUE(c.lpc);
  const ConnectivityReport d = check_pc_lpc(generated(g, {fz_indicator({"a"}, g), fz_indicator({"b"}, g)}));
  EXPECT_FALSE(d.pc);
  EXPECT_EQ(d.components.size(), 2U);
  EXPECT_TRUE(check_pc_lpc(constants(abc(1), {{"T", "1/2"}})).pc);
}

TEST(Connectivity, SeparationExpressionsPartitionTheCylinder) {
  Gen gen(34);
  int disconnected = 0;
  for (int rep = 0; rep < 150; ++rep) {
    const GroundRef g = gen.ground(5);
    const FuzzyTopology topo = gen.topology(g, 4, 4);
    const ConnectivityReport r = check_pc_lpc(topo);
    EXPECT_EQ(r.pc, r.components.size() == 1);
    if (r.pc) continue;
    ++disconnected;
    std::vector<std::string> rest;
    for (std::size_t i = 1; i < r.components.size(); ++i) {
      rest.insert(rest.end(), r.components[i].begin(), r.components[i].end());
    }
    const CylinderOpen u = open_realize(component_cylinder_expr(topo, r.components[0]), topo);
    const CylinderOpen v = open_realize(component_cylinder_expr(topo, rest), topo);
    EXPECT_FALSE(u.is_empty());
    EXPECT_FALSE(v.is_empty());
    EXPECT_TRUE(u.intersect(v).is_empty());
    EXPECT_EQ(u.unite(v), CylinderOpen::whole(g));
  }
  EXPECT_GT(disconnected, 0);
}
