#include "fuzzytop/sweeps.hpp"

#include <algorithm>
#include <set>

#include "fuzzytop/base_space.hpp"
#include "fuzzytop/complement.hpp"
#include "fuzzytop/oracle.hpp"
#include "fuzzytop/path_laws.hpp"
#include "fuzzytop/random.hpp"

namespace fuzzytop {

namespace {

constexpr std::size_t kMaxGround = 6;
constexpr std::size_t kMaxGens = 4;
constexpr long kMaxDen = 32;
constexpr long kPathDen = 16;
constexpr std::size_t kMeetBudget = 3000;

void fail(SweepResult& r, const std::string& what) {
  ++r.failures;
  if (r.first_failure.empty()) r.first_failure = what;
}

void oracle(SweepResult& r, const CylinderOpen& symbolic, const GridOracle& brute, const std::string& what) {
  ++r.oracle_checks;
  const OracleVerdict v = oracle_compare(symbolic, brute);
  if (v.equal) return;
  ++r.oracle_failures;
  if (r.first_failure.empty()) {
    r.first_failure = "grid mismatch in " + what + " at (" + v.first->element + "," + v.first->level.str() + ")";
  }
}

FuzzyTopology topology_for(const SweepConfig& cfg, Gen& gen) {
  if (cfg.topology) return *cfg.topology;
  return gen.topology(gen.ground(kMaxGround), kMaxGens, kMaxDen);
}

std::vector<SubbasisElem> subbasis_sweep(const FuzzyTopology& topo, const std::vector<Rational>& gammas) {
  std::vector<SubbasisElem> out;
  for (const auto& g : gammas) {
    for (const auto& o : topo.opens()) out.emplace_back(TStar{o.name, g});
    out.emplace_back(Pi2{g});
  }
  return out;
}

GridOracle brute_expr(const OpenExpr& expr, const FuzzyTopology& topo, long n) {
  GridOracle acc = GridOracle::blank(topo.ground(), n);
  for (const auto& clause : expr.clauses) {
    GridOracle c = brute_subbasis(clause.front(), topo, n);
    for (std::size_t k = 1; k < clause.size(); ++k) c = brute_meet(c, brute_subbasis(clause[k], topo, n));
    acc = brute_join(acc, c);
  }
  return acc;
}

// k-subsets of {0..n-1}: all of them when there are at most `budget`, else `budget` random draws.
std::vector<std::vector<std::size_t>> small_families(std::size_t n, std::size_t max_k, std::size_t budget, Gen& gen) {
  std::vector<std::vector<std::size_t>> out;
  double total = 0;
  for (std::size_t k = 2; k <= max_k && k <= n; ++k) {
    double c = 1;
    for (std::size_t r = 0; r < k; ++r) c = c * static_cast<double>(n - r) / static_cast<double>(r + 1);
    total += c;
  }
  if (total <= static_cast<double>(budget)) {
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (pick.size() >= 2) out.push_back(pick);
      if (pick.size() == max_k) return;
      for (std::size_t k = start; k < n; ++k) {
        pick.push_back(k);
        self(self, k + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
    return out;
  }
  std::vector<std::size_t> all(n);
  for (std::size_t k = 0; k < n; ++k) all[k] = k;
  for (std::size_t s = 0; s < budget; ++s) {
    std::shuffle(all.begin(), all.end(), gen.engine());
    const auto k = static_cast<std::size_t>(gen.uniform(2, static_cast<long>(std::min(max_k, n))));
    out.emplace_back(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return out;
}

struct Anchor {
  Rational t;
  CylPoint p;
  SubbasisElem target;
};

// The i-th anchor cycles through the three cases; points and targets are
// redrawn until H(t, p) lands in the target.
Anchor draw_anchor(Gen& gen, const FuzzyTopology& topo, std::size_t i) {
  Rational t;
  switch (i % 3) {
    case 0: t = Rational(0); break;
    case 1: t = Rational(1); break;
    default: {
      const long q = gen.uniform(2, kMaxDen);
      t = Rational(gen.uniform(1, q - 1), q);
    }
  }
  for (;;) {
    CylPoint p = gen.point(topo.ground(), kMaxDen);
    SubbasisElem target = gen.subbasis(topo, kMaxDen);
    const CylPoint img = h_eval(t, p);
    if (cyl_contains(subbasis_realize(target, topo), img.x, img.alpha)) return {t, std::move(p), std::move(target)};
  }
}

struct PathCase {
  FuzzyTopology topo;
  PathExpr gamma;
  PathExpr delta;
  std::vector<PathExpr> chain;
  CylPoint point;
  Rational s, t, a, b;
};

std::vector<PathCase> path_cases(const SweepConfig& cfg) {
  Gen gen(cfg.seed);
  std::vector<PathCase> out;
  std::optional<FuzzyTopology> topo;
  std::optional<FiniteTopology> base;
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    if (i % 10 == 0) {
      topo = topology_for(cfg, gen);
      base = iota_x(*topo);
    }
    PathExpr gamma = gen.path(*base, kPathDen, 4);
    PathExpr delta = gen.path_from(gamma.finish(), *base, kPathDen, 3);
    std::vector<PathExpr> chain{gen.path(*base, kPathDen, 2)};
    const auto n = static_cast<std::size_t>(gen.uniform(2, 4));
    while (chain.size() < n) chain.push_back(gen.path_from(chain.back().finish(), *base, kPathDen, 2));
    const CylPoint p = gen.point(topo->ground(), kPathDen);
    const Rational s = gen.unit(kPathDen);
    const Rational t = gen.unit(kPathDen);
    Rational a = gen.unit(kPathDen);
    Rational b = gen.unit(kPathDen);
    if (a == b) b = a.is_zero() ? Rational(1) : Rational(0);
    if (b < a) std::swap(a, b);
    out.push_back({*topo, std::move(gamma), std::move(delta), std::move(chain), p, s, t, a, b});
  }
  return out;
}

}  // namespace

SweepResult sweep_psi_laws(const SweepConfig& cfg) {
  SweepResult r;
  r.name = "psi-laws";
  Gen gen(cfg.seed);
  const long n = cfg.oracle_resolution;
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    const FuzzyTopology topo = topology_for(cfg, gen);
    ++r.cases;
    const LawReport law = verify_psi_laws(topo);
    r.checks += law.checks;
    if (!law.exhaustive) ++r.counters["sampled-families"];
    if (!law.ok) fail(r, "case " + std::to_string(i) + ": " + law.law + " law fails");

    const auto& opens = topo.opens();
    std::vector<GridOracle> brute;
    for (const auto& o : opens) {
      brute.push_back(brute_psi_star(o.set, n));
      oracle(r, psi_star(o.set), brute.back(), "psi_star(" + o.name + ")");
    }
    // A random handful of pairs against brute meet and join.
    for (int k = 0; k < 8; ++k) {
      const auto a = static_cast<std::size_t>(gen.uniform(0, static_cast<long>(opens.size()) - 1));
      const auto b = static_cast<std::size_t>(gen.uniform(0, static_cast<long>(opens.size()) - 1));
      const CylinderOpen pa = psi_star(opens[a].set);
      const CylinderOpen pb = psi_star(opens[b].set);
      oracle(r, pa.intersect(pb), brute_meet(brute[a], brute[b]), "meet");
      oracle(r, pa.unite(pb), brute_join(brute[a], brute[b]), "join");
      oracle(r, psi_star(fz_meet(opens[a].set, opens[b].set)), brute_meet(brute[a], brute[b]), "psi of meet");
      oracle(r, psi_star(fz_join({opens[a].set, opens[b].set})), brute_join(brute[a], brute[b]), "psi of join");
    }
  }
  return r;
}

SweepResult sweep_round_trip(const SweepConfig& cfg) {
  SweepResult r;
  r.name = "round-trip";
  Gen gen(cfg.seed);
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    const GroundRef g = cfg.topology ? cfg.topology->ground() : gen.ground(kMaxGround);
    const FuzzySet f = gen.fuzzy(g, kMaxDen);
    ++r.cases;
    ++r.checks;
    const CylinderOpen c = psi_star(f);
    if (!(recover_membership(c) == f)) fail(r, "round trip fails for " + f.str());
    oracle(r, c, brute_psi_star(f, cfg.oracle_resolution), "psi_star(" + f.str() + ")");
  }
  return r;
}

SweepResult sweep_indicator_compat(const SweepConfig& cfg) {
  SweepResult r;
  r.name = "indicator-compat";
  const long n = cfg.oracle_resolution;
  for (std::size_t size = 1; size <= 5; ++size) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < size; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    const GroundRef g = make_ground(names);
    for (unsigned mask = 0; mask < (1U << size); ++mask) {
      std::set<std::string> subset;
      for (std::size_t i = 0; i < size; ++i) {
        if ((mask >> i) & 1U) subset.insert(names[i]);
      }
      const FuzzySet f = fz_indicator(subset, g);
      ++r.cases;
      ++r.checks;
      const CompatReport c = complement_compat(f);
      if (!c.equal) fail(r, "indicator " + f.str() + " is not complement compatible");
      const GridOracle bf = brute_psi_star(f, n);
      oracle(r, psi_star(f), bf, "psi_star(indicator)");
      oracle(r, c.complement_of_psi, brute_complement(bf), "complement of psi_star");
      oracle(r, c.psi_of_complement, brute_psi_star(fz_complement(f), n), "psi_star of complement");
    }
  }
  return r;
}

SweepResult sweep_retraction(const SweepConfig& cfg) {
  SweepResult r;
  r.name = "retraction";
  Gen gen(cfg.seed);
  const long n = cfg.oracle_resolution;
  const std::size_t topologies = std::max<std::size_t>(1, (cfg.cases + 4) / 5);
  std::size_t anchor = 0;
  for (std::size_t k = 0; k < topologies; ++k) {
    const FuzzyTopology topo = topology_for(cfg, gen);
    ++r.counters["topologies"];
    const std::size_t here = std::min<std::size_t>(5, cfg.cases - anchor);
    for (std::size_t j = 0; j < here; ++j, ++anchor) {
      const Anchor an = draw_anchor(gen, topo, anchor);
      const Rational& t = an.t;
      const CylPoint& p = an.p;
      const SubbasisElem& target = an.target;
      ++r.cases;
      ++r.checks;
      const BoxWitness w = continuity_witness(t, p, target, topo);
      ++r.counters[to_string(witness_case(t))];
      if (!verify_witness(w, topo)) {
        fail(r, "witness rejected at t=" + t.str() + " p=" + to_string(p) + " target " + to_string(target));
      }
      oracle(r, w.region, brute_expr(w.region_expr, topo, n), "witness region");
      const CylinderOpen image = h_image_of_box(w.t_interval, w.region);
      oracle(r, image, brute_h_image(w.t_interval, w.region, n), "box image");
      oracle(r, subbasis_realize(target, topo), brute_subbasis(target, topo, n), "target");
    }
  }
  return r;
}

SweepResult sweep_sigma(const SweepConfig& cfg) {
  SweepResult r;
  r.name = "sigma";
  Gen gen(cfg.seed);
  const long n = cfg.oracle_resolution;
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    const FuzzyTopology topo = topology_for(cfg, gen);
    ++r.cases;
    const CylinderOpen slice = sigma_image(CylinderOpen::whole(topo.ground()));
    std::vector<SubbasisElem> tstars;
    for (const auto& e : subbasis_sweep(topo, critical_gammas(topo))) {
      ++r.checks;
      const CylinderOpen img = sigma_image_subbasis(e, topo);
      const bool is_tstar = std::holds_alternative<TStar>(e);
      const CylinderOpen expect = is_tstar ? slice_part(subbasis_realize(e, topo)) : slice;
      if (!(img == expect)) fail(r, "sigma image of " + to_string(e));
      oracle(r, img, brute_sigma_subbasis(e, topo, n), "sigma(" + to_string(e) + ")");
      if (is_tstar) tstars.push_back(e);
    }
    // Finite meets of T* preimages.
    for (const auto& fam : small_families(tstars.size(), 3, kMeetBudget / 10, gen)) {
      ++r.checks;
      CylinderOpen meet = subbasis_realize(tstars[fam[0]], topo);
      CylinderOpen images = sigma_image_subbasis(tstars[fam[0]], topo);
      GridOracle brute = brute_subbasis(tstars[fam[0]], topo, n);
      for (std::size_t k = 1; k < fam.size(); ++k) {
        meet = meet.intersect(subbasis_realize(tstars[fam[k]], topo));
        images = images.intersect(sigma_image_subbasis(tstars[fam[k]], topo));
        brute = brute_meet(brute, brute_subbasis(tstars[fam[k]], topo, n));
      }
      if (!(sigma_image(meet) == images)) fail(r, "sigma does not commute with a finite meet");
      oracle(r, meet, brute, "finite meet");
    }
  }
  return r;
}

SweepResult sweep_path_laws(const SweepConfig& cfg) {
  SweepResult r;
  r.name = "path-laws";
  const long grid = cfg.grid;
  std::size_t idx = 0;
  for (const PathCase& c : path_cases(cfg)) {
    ++r.cases;
    const std::string tag = "case " + std::to_string(idx++) + ": ";
    auto law = [&](const char* name, bool ok) {
      ++r.checks;
      ++r.counters[name];
      if (!ok) fail(r, tag + name);
    };
    law("htransform-reverse", law_htransform_reverse(c.gamma, c.t, grid));
    law("htransform-concat", law_htransform_concat(c.chain, c.t, grid));
    law("chi-flip", law_chi_flip(c.gamma, c.s, c.t, grid));
    law("boundary", law_boundary_restrictions(c.gamma, c.s, c.t, grid));
    law("restriction", law_path_restriction(c.gamma, c.s, c.t, c.a, c.b, grid));
    law("constant", law_constant(c.point, c.s, c.t, grid));
    law("relative-endpoints", law_relative_endpoints(c.gamma, c.s, c.t));
    law("pasting", law_functoriality_pasting(c.gamma, c.delta, c.s, c.t, grid));
  }
  return r;
}

SweepResult sweep_dsl_continuity(const SweepConfig& cfg) {
  SweepResult r;
  r.name = "dsl-continuity";
  const Rational one(1), minus_one(-1);
  for (const PathCase& c : path_cases(cfg)) {
    std::vector<PathExpr> paths{c.gamma,
                                c.delta,
                                PathExpr::concat(c.chain),
                                PathExpr::concat({c.gamma, c.delta}),
                                PathExpr::htransform(c.s, c.gamma),
                                PathExpr::reverse(c.gamma),
                                PathExpr::chi_boundary(c.gamma, c.s, c.t, 0),
                                PathExpr::chi_boundary(c.gamma, c.s, c.t, 1),
                                PathExpr::constant(c.point)};
    const std::vector<Rational> critical = critical_gammas(c.topo);
    for (const auto& p : paths) {
      ++r.cases;
      // Gammas at which the path touches a subbasis boundary, plus the critical ones.
      const PathNormalForm nf = normal_form(p);
      std::set<Rational> gammas(critical.begin(), critical.end());
      for (const auto& v : nf.values) {
        gammas.insert(v.alpha);
        for (const auto& o : c.topo.opens()) {
          const Rational g = o.set.at(v.x) - v.alpha;
          if (g >= minus_one && g < one) gammas.insert(g);
        }
      }
      for (const auto& e : subbasis_sweep(c.topo, {gammas.begin(), gammas.end()})) {
        ++r.checks;
        if (!path_preimage_open(nf, e, c.topo)) fail(r, "preimage of " + to_string(e) + " is not open");
      }
    }
  }
  return r;
}

SweepResult sweep_complement(const SweepConfig& cfg) {
  SweepResult r;
  r.name = "complement";
  Gen gen(cfg.seed);
  const Rational one(1);
  const std::vector<Rational> probes{Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    const GroundRef g = cfg.topology ? cfg.topology->ground() : gen.ground(kMaxGround);
    const FuzzySet f = gen.fuzzy(g, kMaxDen);
    std::vector<Rational> gv;
    for (const auto& v : f.values()) gv.push_back(one - v);
    if (i % 2 == 1) {
      const auto y = static_cast<std::size_t>(gen.uniform(0, static_cast<long>(g->size()) - 1));
      Rational v = gen.unit(kMaxDen);
      while (v == gv[y]) v = gen.unit(kMaxDen);
      gv[y] = v;
      ++r.counters["perturbed"];
    } else {
      ++r.counters["exact"];
    }
    const FuzzySet gset(g, gv);
    ++r.cases;
    bool direct = true;
    for (std::size_t k = 0; k < g->size(); ++k) direct = direct && gset.at(k) == one - f.at(k);
    for (const auto& beta : probes) {
      ++r.checks;
      if (is_complement(f, gset, beta) != direct) {
        fail(r, "verdict differs from G = 1 - F at beta " + beta.str() + " for F=" + f.str() + ", G=" + gset.str());
      }
    }
    ++r.checks;
    const FuzzySet cf = fz_complement(f);
    if (!is_complement(f, cf) || !is_complement(cf, f)) fail(r, "complement is not an involution for " + f.str());
    ++r.checks;
    const std::string y = g->name(static_cast<std::size_t>(gen.uniform(0, static_cast<long>(g->size()) - 1)));
    const std::string z = g->name(static_cast<std::size_t>(gen.uniform(0, static_cast<long>(g->size()) - 1)));
    if (!check_constant_inverse(f, y, z, gen.level(kMaxDen))) fail(r, "constant inverse law fails for " + f.str());
  }
  return r;
}

std::vector<BoxWitness> random_witnesses(const FuzzyTopology& topo, std::size_t n, std::uint64_t seed) {
  Gen gen(seed);
  std::vector<BoxWitness> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Anchor an = draw_anchor(gen, topo, i);
    out.push_back(continuity_witness(an.t, an.p, an.target, topo));
  }
  return out;
}

}  // namespace fuzzytop
