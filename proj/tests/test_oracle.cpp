#include <gtest/gtest.h>

#include "fuzzytop/oracle.hpp"
#include "fuzzytop/random.hpp"
#include "support.hpp"

using namespace fuzzytop;
using fuzzytop::testing::abc;
using fuzzytop::testing::constant;
using fuzzytop::testing::iv;
using fuzzytop::testing::q;

TEST(Rasterize, Examples) {
  const GroundRef g = abc(2);
  const GridOracle third = oracle_rasterize(psi_star(constant(g, "1/3")), 6);
  for (const auto& row : third.cells) EXPECT_EQ(row, (std::vector<bool>{true, true, false, false, false, false}));
  for (const auto& row : oracle_rasterize(CylinderOpen::whole(g), 4).cells) EXPECT_EQ(row, std::vector<bool>(4, true));
  for (const auto& row : oracle_rasterize(CylinderOpen::empty(g), 4).cells) EXPECT_EQ(row, std::vector<bool>(4, false));
  EXPECT_THROW(oracle_rasterize(CylinderOpen::empty(g), 1), DomainError);
}

TEST(Compare, ReportsFirstCorruptedCell) {
  const GroundRef g = abc(2);
  const CylinderOpen c = psi_star(constant(g, "1/3"));
  EXPECT_TRUE(oracle_compare(c, brute_psi_star(constant(g, "1/3"), 64)).equal);
  const CylinderOpen bad(g, {iv("0", "1/3", true, false), iv("0", "1/2", true, false)});
  const OracleVerdict v = oracle_compare(bad, brute_psi_star(constant(g, "1/3"), 64));
  EXPECT_FALSE(v.equal);
  ASSERT_TRUE(v.first.has_value());
  EXPECT_EQ(v.first->element, "b");
  EXPECT_EQ(v.first->level, q("22/64"));
  EXPECT_TRUE(v.first->symbolic);
  EXPECT_FALSE(v.first->brute);
}

TEST(Compare, MeetsJoinsAndComplementsAgreeWithBrute) {
  Gen gen(71);
  for (int rep = 0; rep < 100; ++rep) {
    const GroundRef g = gen.ground(6);
    const FuzzyTopology topo = gen.topology(g, 4, 32);
    for (std::size_t i = 0; i < topo.size() && i < 8; ++i) {
      for (std::size_t j = 0; j < topo.size() && j < 8; ++j) {
        const FuzzySet& a = topo.opens()[i].set;
        const FuzzySet& b = topo.opens()[j].set;
        EXPECT_TRUE(oracle_compare(psi_star(fz_meet(a, b)), brute_meet(brute_psi_star(a, 64), brute_psi_star(b, 64))).equal);
        EXPECT_TRUE(
            oracle_compare(psi_star(fz_join({a, b})), brute_join(brute_psi_star(a, 64), brute_psi_star(b, 64))).equal);
      }
      const FuzzySet& a = topo.opens()[i].set;
      EXPECT_TRUE(oracle_compare(cyl_complement(psi_star(a)), brute_complement(brute_psi_star(a, 64))).equal);
    }
    for (int k = 0; k < 4; ++k) {
      const SubbasisElem e = gen.subbasis(topo, 32);
      EXPECT_TRUE(oracle_compare(subbasis_realize(e, topo), brute_subbasis(e, topo, 64)).equal);
      EXPECT_TRUE(oracle_compare(sigma_image_subbasis(e, topo), brute_sigma_subbasis(e, topo, 64)).equal);
    }
  }
}

TEST(Brute, CellsFollowDefiningInequalities) {
  // The brute oracles themselves, checked against hand evaluation on a tiny grid.
  const GroundRef g = abc(1);
  const FuzzyTopology topo = fuzzytop::testing::constants(g, {{"T", "1/2"}});
  const GridOracle t = brute_subbasis(TStar{"T", q("1/4")}, topo, 8);  // 1/2 - k/8 > 1/4 iff k < 2
  EXPECT_EQ(t.cells[0], (std::vector<bool>{true, true, false, false, false, false, false, false}));
  const GridOracle p = brute_subbasis(Pi2{q("1/2")}, topo, 8);  // k/8 > 1/2 iff k > 4
  EXPECT_EQ(p.cells[0], (std::vector<bool>{false, false, false, false, false, true, true, true}));
  const GridOracle h = brute_h_image({q("1/2"), q("1/2"), true, true}, CylinderOpen::uniform(g, iv("1/2", "1", true, false)), 8);
  // (1/2) a for a in [1/2,1) covers [1/4,1/2).
  EXPECT_EQ(h.cells[0], (std::vector<bool>{false, false, true, true, false, false, false, false}));
}
