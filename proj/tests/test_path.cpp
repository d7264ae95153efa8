#include <gtest/gtest.h>

#include "fuzzytop/path.hpp"
#include "fuzzytop/path_laws.hpp"
#include "fuzzytop/random.hpp"
#include "support.hpp"

using namespace fuzzytop;
using fuzzytop::testing::abc;
using fuzzytop::testing::constants;
using fuzzytop::testing::q;

namespace {

const Rational kOne(1);

FiniteTopology indiscrete(const GroundRef& g) { return FiniteTopology::generated_by(g, {}); }

// Reference evaluator written straight from the definitions, recursing on the tree.
CylPoint ref_eval(const PathExpr& e, const FiniteTopology& base, const Rational& u) {
  return std::visit(
      [&](const auto& n) -> CylPoint {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, PathExpr::Const>) {
          return n.p;
        } else if constexpr (std::is_same_v<N, PathExpr::Vertical>) {
          return {n.x, n.a0 + (n.a1 - n.a0) * u};
        } else if constexpr (std::is_same_v<N, PathExpr::HLift>) {
          const auto& steps = n.base.steps();
          const Rational k(static_cast<long>(steps.size() - 1));
          const Rational pos = u * k;
          const mpz_class fl = pos.numerator() / pos.denominator();
          const auto i = static_cast<std::size_t>(fl.get_ui());
          if (pos == Rational(static_cast<long>(i))) return {steps[i], n.level};
          // Open segment: the element whose minimal open contains the other.
          const auto& g = *base.ground();
          const std::size_t a = g.index(steps[i]), b = g.index(steps[i + 1]);
          const bool b_in_ua = (base.minimal_open(a) >> b) & 1U;
          return {b_in_ua ? steps[i + 1] : steps[i], n.level};
        } else if constexpr (std::is_same_v<N, PathExpr::Concat>) {
          // ((p0 * p1) * p2) * ... : the last part owns the upper half.
          PathExpr head = n.parts.front();
          if (n.parts.size() == 1) return ref_eval(head, base, u);
          std::vector<PathExpr> init(n.parts.begin(), n.parts.end() - 1);
          const Rational half(1, 2);
          if (u <= half) {
            return init.size() == 1 ? ref_eval(init.front(), base, u * Rational(2))
                                    : ref_eval(PathExpr::concat(init), base, u * Rational(2));
          }
          return ref_eval(n.parts.back(), base, u * Rational(2) - kOne);
        } else if constexpr (std::is_same_v<N, PathExpr::Reverse>) {
          return ref_eval(n.inner, base, kOne - u);
        } else if constexpr (std::is_same_v<N, PathExpr::HTransform>) {
          const CylPoint p = ref_eval(n.inner, base, u);
          return {p.x, (kOne - n.t) * p.alpha};
        } else {
          const CylPoint p = ref_eval(n.rho, base, Rational(n.end));
          const Rational k = (n.t - n.s) * u + n.s;
          return {p.x, (kOne - k) * p.alpha};
        }
      },
      e.node().v);
}

}  // namespace

TEST(Kappa, Examples) {
  EXPECT_EQ(kappa(q("1/4"), q("3/4"), q("0")), q("1/4"));
  EXPECT_EQ(kappa(q("1/4"), q("3/4"), q("1")), q("3/4"));
  EXPECT_EQ(kappa(q("1/4"), q("3/4"), q("1/2")), q("1/2"));
  EXPECT_EQ(kappa(q("1"), q("0"), q("2/3")), kappa(q("0"), q("1"), q("1/3")));
  EXPECT_THROW(kappa(q("2"), q("0"), q("0")), DomainError);
}

TEST(EvalPath, Examples) {
  const PathExpr v = PathExpr::vertical("x", q("0"), q("1/2"));
  EXPECT_EQ(eval_path(v, q("1/2")), (CylPoint{"x", q("1/4")}));
  for (const char* u : {"0", "1/3", "1"}) EXPECT_EQ(eval_path(PathExpr::htransform(q("1"), v), q(u)).alpha, q("0"));
  EXPECT_EQ(eval_path(PathExpr::htransform(q("0"), v), q("1/3")), eval_path(v, q("1/3")));
  EXPECT_THROW(eval_path(v, q("3/2")), DomainError);
  EXPECT_THROW(PathExpr::vertical("x", q("0"), q("1")), DomainError);
}

TEST(EvalPath, ConcatHalvesAndChecksEndpoints) {
  const PathExpr a = PathExpr::vertical("x", q("0"), q("1/2"));
  const PathExpr b = PathExpr::vertical("x", q("1/2"), q("1/4"));
  const PathExpr ab = PathExpr::concat({a, b});
  EXPECT_EQ(eval_path(ab, q("1/4")), (CylPoint{"x", q("1/4")}));
  EXPECT_EQ(eval_path(ab, q("1/2")), (CylPoint{"x", q("1/2")}));
  EXPECT_EQ(eval_path(ab, q("1")), (CylPoint{"x", q("1/4")}));
  EXPECT_THROW(PathExpr::concat({a, a}), DomainError);
  EXPECT_EQ(PathExpr::reverse(ab).start(), ab.finish());
}

TEST(FencePath, RealizationAndValidation) {
  const GroundRef g = abc(3);
  // Opens {}, {a}, {a,b}, X give c <= b <= a; each open segment takes the larger end.
  const FiniteTopology chain = FiniteTopology::generated_by(g, {1, 3});
  const FencePath f = FencePath::make({"c", "b", "a"}, chain);
  EXPECT_EQ(f.segments(), 2U);
  EXPECT_EQ(f.at(q("0")), "c");
  EXPECT_EQ(f.at(q("1/4")), "b");
  EXPECT_EQ(f.at(q("1/2")), "b");
  EXPECT_EQ(f.at(q("3/4")), "a");
  EXPECT_EQ(f.at(q("1")), "a");
  const FiniteTopology discrete = FiniteTopology::generated_by(g, {1, 2, 4});
  EXPECT_THROW(FencePath::make({"a", "b"}, discrete), DomainError);
  EXPECT_THROW(FencePath::make({}, chain), DomainError);
}

TEST(Chi, Examples) {
  const PathExpr rho = PathExpr::constant({"z", q("1/2")});
  EXPECT_EQ(chi_eval(rho, q("0"), q("1"), q("1/3"), q("0")), (CylPoint{"z", q("1/2")}));
  EXPECT_EQ(chi_eval(rho, q("0"), q("1"), q("2/3"), q("1/2")), (CylPoint{"z", q("1/4")}));

  Gen gen(51);
  const FiniteTopology base = indiscrete(abc(3));
  for (int rep = 0; rep < 100; ++rep) {
    const PathExpr r = gen.path(base, 16, 3);
    const Rational s = gen.unit(16), t = gen.unit(16), eta = gen.unit(16);
    EXPECT_EQ(chi_eval(r, s, t, eta, kOne), eval_path(PathExpr::htransform(t, r), eta));
    EXPECT_EQ(chi_eval(r, s, t, eta, Rational(0)), eval_path(PathExpr::htransform(s, r), eta));
  }
}

TEST(Chi, BoundaryExamples) {
  const PathExpr rho = PathExpr::vertical("y", q("1/2"), q("1/4"));
  const PathExpr p = chi_boundary(rho, q("0"), q("1"), 0);
  EXPECT_EQ(normal_form(p), normal_form(PathExpr::vertical("y", q("1/2"), q("0"))));

  const PathExpr flat = chi_boundary(rho, q("1/3"), q("1/3"), 0);
  EXPECT_EQ(normal_form(flat), normal_form(PathExpr::constant({"y", q("1/3")})));

  const Rational alpha = q("3/4"), beta = q("1/4");
  const PathExpr c = PathExpr::constant({"y", alpha});
  const PathExpr drop = chi_boundary(c, q("0"), kOne - beta / alpha, 1);
  EXPECT_EQ(drop.start(), (CylPoint{"y", alpha}));
  EXPECT_EQ(drop.finish(), (CylPoint{"y", beta}));

  // The DSL node and the helper describe the same path.
  EXPECT_EQ(normal_form(PathExpr::chi_boundary(rho, q("1/4"), q("2/3"), 1)),
            normal_form(chi_boundary(rho, q("1/4"), q("2/3"), 1)));
}

TEST(Containment, Examples) {
  const GroundRef g = abc(2);
  const FuzzyTopology topo = constants(g, {{"T", "2/3"}});
  const CylinderOpen tstar = subbasis_realize(TStar{"T", q("1/4")}, topo);  // [0,5/12)
  EXPECT_TRUE(path_in_open(PathExpr::vertical("a", q("1/3"), q("0")), tstar).inside);
  const CylinderOpen pi2 = subbasis_realize(Pi2{q("1/4")}, topo);
  EXPECT_TRUE(path_in_open(PathExpr::vertical("b", q("1/3"), q("3/4")), pi2).inside);
  const ContainmentResult out = path_in_open(PathExpr::vertical("a", q("1/3"), q("1/2")), tstar);
  EXPECT_FALSE(out.inside);
  ASSERT_TRUE(out.witness.has_value());
  EXPECT_FALSE(cyl_contains(tstar, out.witness->x, out.witness->alpha));
  EXPECT_GE(out.witness->alpha, q("5/12"));
}

TEST(Preimage, Examples) {
  const GroundRef g = abc(2);
  const FuzzyTopology topo = constants(g, {{"T", "2/3"}});
  const PathExpr half = PathExpr::vertical("a", q("0"), q("1/2"));
  const SubbasisElem target = TStar{"T", q("1/4")};
  EXPECT_EQ(path_preimage(half, subbasis_realize(target, topo)),
            IntervalSet::normalize({{q("0"), q("5/6"), true, false}}));
  EXPECT_TRUE(path_preimage_open(half, target, topo));

  const FiniteTopology base = indiscrete(g);
  const PathExpr lift = PathExpr::hlift(FencePath::make({"a", "b", "a"}, base), q("1/2"));
  EXPECT_EQ(path_preimage(lift, subbasis_realize(Pi2{q("1/4")}, topo)), IntervalSet::of(unit_interval()));

  const PathExpr still = PathExpr::constant({"a", q("2/3")});
  EXPECT_TRUE(path_preimage(still, subbasis_realize(target, topo)).empty());
  EXPECT_TRUE(path_preimage_open(still, TStar{"T", q("0")}, topo));
}

TEST(Preimage, FenceInteriorsKeepPreimagesOpen) {
  // Sierpinski space with {a} open: b <= a. The fence b, a, b touches b only at
  // the breakpoints 0 and 1, so the preimage of {a} x J is the open (0,1).
  const GroundRef g = abc(2);
  const FiniteTopology sierpinski = FiniteTopology::generated_by(g, {1});
  const FencePath f = FencePath::make({"b", "a", "b"}, sierpinski);
  EXPECT_EQ(f.at(q("1/4")), "a");
  EXPECT_EQ(f.at(q("0")), "b");
  const FuzzyTopology topo = fz_generate_topology(g, std::vector<FuzzySet>{fz_indicator({"a"}, g)});
  const std::string name = *topo.name_of(fz_indicator({"a"}, g));
  const PathExpr p = PathExpr::hlift(f, q("0"));
  EXPECT_EQ(path_preimage(p, subbasis_realize(TStar{name, q("0")}, topo)),
            IntervalSet::normalize({{q("0"), q("1"), false, false}}));
  EXPECT_TRUE(path_preimage_open(p, TStar{name, q("0")}, topo));
}

TEST(FunctorObjectPath, Examples) {
  const GroundRef g = abc(2);
  const FuzzySet f = fuzzytop::testing::fz(g, {"1/4", "1/2"});
  const PathExpr p = functor_object_path(f, "a", "b", q("1/2"));
  EXPECT_EQ(p.start(), (CylPoint{"b", q("3/8")}));
  EXPECT_EQ(p.finish(), (CylPoint{"b", q("1/8")}));
  EXPECT_EQ(normal_form(functor_object_path(f, "b", "a", q("1/2"))), normal_form(PathExpr::constant({"a", q("1/4")})));
  EXPECT_EQ(normal_form(functor_object_path(f, "a", "a", q("0"))), normal_form(PathExpr::constant({"a", q("0")})));
}

TEST(NormalForm, CanonicalAcrossEquivalentTrees) {
  const PathExpr a = PathExpr::vertical("x", q("0"), q("1/2"));
  const PathExpr b = PathExpr::vertical("x", q("1/2"), q("1/2"));
  EXPECT_EQ(normal_form(PathExpr::reverse(PathExpr::reverse(a))), normal_form(a));
  EXPECT_EQ(normal_form(b), normal_form(PathExpr::constant({"x", q("1/2")})));
  // Two halves of one affine path glue back into it.
  const PathExpr lo = PathExpr::vertical("x", q("0"), q("1/4"));
  const PathExpr hi = PathExpr::vertical("x", q("1/4"), q("1/2"));
  EXPECT_EQ(normal_form(PathExpr::concat({lo, hi})), normal_form(a));
  EXPECT_NE(normal_form(PathExpr::concat({a, PathExpr::reverse(a)})), normal_form(PathExpr::constant({"x", q("0")})));
}

TEST(RandomPaths, EvaluatorsAgreeWithReference) {
  Gen gen(52);
  for (int rep = 0; rep < 200; ++rep) {
    const GroundRef g = gen.ground(5);
    const FiniteTopology base = iota_x(gen.topology(g, 3, 4));
    const PathExpr p = gen.path(base, 16, 4);
    const PathNormalForm nf = normal_form(p);
    EXPECT_EQ(nf.breaks.front(), Rational(0));
    EXPECT_EQ(nf.breaks.back(), kOne);
    for (long i = 0; i <= 96; ++i) {
      const Rational u(i, 96);
      const CylPoint want = ref_eval(p, base, u);
      EXPECT_EQ(eval_path(p, u), want);
      EXPECT_EQ(nf.eval(u), want);
    }
    EXPECT_EQ(p.start(), ref_eval(p, base, Rational(0)));
    EXPECT_EQ(p.finish(), ref_eval(p, base, kOne));
  }
}

TEST(RandomPaths, PreimagesMatchSampledMembershipAndAreOpen) {
  Gen gen(53);
  for (int rep = 0; rep < 150; ++rep) {
    const GroundRef g = gen.ground(4);
    const FuzzyTopology topo = gen.topology(g, 3, 8);
    const FiniteTopology base = iota_x(topo);
    const PathExpr p = gen.path(base, 8, 3);
    for (int k = 0; k < 4; ++k) {
      const SubbasisElem e = gen.subbasis(topo, 8);
      const CylinderOpen target = subbasis_realize(e, topo);
      const IntervalSet pre = path_preimage(p, target);
      EXPECT_TRUE(pre.is_relatively_open(unit_interval())) << to_string(e) << " " << pre.str();
      EXPECT_TRUE(path_preimage_open(p, e, topo));
      for (long i = 0; i <= 96; ++i) {
        const Rational u(i, 96);
        const CylPoint at = ref_eval(p, base, u);
        EXPECT_EQ(pre.contains(u), cyl_contains(target, at.x, at.alpha));
      }
    }
  }
}

TEST(PathLaws, RandomizedIdentities) {
  Gen gen(54);
  for (int rep = 0; rep < 60; ++rep) {
    const GroundRef g = gen.ground(4);
    const FiniteTopology base = iota_x(gen.topology(g, 3, 4));
    const PathExpr gamma = gen.path(base, 16, 3);
    const PathExpr delta = gen.path_from(gamma.finish(), base, 16, 3);
    const Rational s = gen.unit(16), t = gen.unit(16);
    Rational a = gen.unit(16), b = gen.unit(16);
    if (b < a) std::swap(a, b);
    if (a == b) b = kOne, a = Rational(0);
    EXPECT_TRUE(law_htransform_reverse(gamma, t, 32));
    EXPECT_TRUE(law_htransform_concat({gamma, delta}, t, 32));
    EXPECT_TRUE(law_chi_flip(gamma, s, t, 32));
    EXPECT_TRUE(law_boundary_restrictions(gamma, s, t, 32));
    EXPECT_TRUE(law_path_restriction(gamma, s, t, a, b, 32));
    EXPECT_TRUE(law_constant(gamma.start(), s, t, 32));
    EXPECT_TRUE(law_relative_endpoints(gamma, s, t));
    EXPECT_TRUE(law_functoriality_pasting(gamma, delta, s, t, 32));
  }
}

TEST(NormalForm, Restriction) {
  const PathExpr v = PathExpr::vertical("x", q("0"), q("1/2"));
  const PathNormalForm whole = normal_form(v);
  EXPECT_NE(whole.restrict(Rational(0), q("1/2")), whole);
  EXPECT_EQ(whole.restrict(Rational(0), kOne), whole);
  EXPECT_EQ(whole.restrict(Rational(0), q("1/2")), normal_form(PathExpr::vertical("x", q("0"), q("1/4"))));
}

TEST(ConnectingPath, JoinsPointsInOneComponent) {
  Gen gen(55);
  for (int rep = 0; rep < 60; ++rep) {
    const GroundRef g = gen.ground(4);
    const FuzzyTopology topo = gen.topology(g, 3, 4);
    const ConnectivityReport r = check_pc_lpc(topo);
    const CylPoint from = gen.point(g, 8), to = gen.point(g, 8);
    const auto p = connecting_path(topo, from, to);
    bool same = false;
    for (const auto& c : r.components) {
      const bool hf = std::find(c.begin(), c.end(), from.x) != c.end();
      const bool ht = std::find(c.begin(), c.end(), to.x) != c.end();
      same = same || (hf && ht);
    }
    ASSERT_EQ(p.has_value(), same);
    if (!p) continue;
    EXPECT_EQ(p->start(), from);
    EXPECT_EQ(p->finish(), to);
    for (const auto& o : topo.opens()) {
      for (const Rational& gamma : critical_gammas(topo)) EXPECT_TRUE(path_preimage_open(*p, TStar{o.name, gamma}, topo));
    }
  }
}
