#include "fuzzytop/base_space.hpp"

#include <deque>
#include <numeric>

namespace fuzzytop {

namespace {

ElementBits bit(std::size_t i) { return ElementBits{1} << i; }

void require_small(const GroundRef& g) {
  if (g->size() > 64) throw DomainError("finite topologies support at most 64 ground elements");
}

}  // namespace

FiniteTopology::FiniteTopology(GroundRef ground, std::set<ElementBits> opens)
    : ground_(std::move(ground)), opens_(std::move(opens)) {}

ElementBits FiniteTopology::full() const {
  return ground_->size() == 64 ? ~ElementBits{0} : bit(ground_->size()) - 1;
}

FiniteTopology FiniteTopology::generated_by(GroundRef ground, const std::set<ElementBits>& family) {
  require_small(ground);
  const ElementBits all = ground->size() == 64 ? ~ElementBits{0} : bit(ground->size()) - 1;
  std::set<ElementBits> opens{0, all};
  std::vector<ElementBits> order{0, all};
  for (ElementBits s : family) {
    if (s & ~all) throw DomainError("subset mentions elements outside the ground set");
    if (opens.insert(s).second) order.push_back(s);
  }
  for (std::size_t done = 0; done < order.size(); ++done) {
    for (std::size_t j = 0; j <= done; ++j) {
      for (ElementBits c : {order[done] & order[j], order[done] | order[j]}) {
        if (opens.insert(c).second) order.push_back(c);
      }
    }
  }
  return FiniteTopology(std::move(ground), std::move(opens));
}

ElementBits FiniteTopology::minimal_open(std::size_t i) const {
  ElementBits m = full();
  for (ElementBits s : opens_) {
    if ((s >> i) & 1U) m &= s;
  }
  return m;
}

std::vector<std::string> FiniteTopology::names(ElementBits s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ground_->size(); ++i) {
    if ((s >> i) & 1U) out.push_back(ground_->name(i));
  }
  return out;
}

SpecializationPreorder::SpecializationPreorder(const FiniteTopology& ft) {
  up_.resize(ft.ground()->size());
  for (std::size_t i = 0; i < up_.size(); ++i) up_[i] = ft.minimal_open(i);
}

std::optional<std::vector<std::size_t>> SpecializationPreorder::fence(std::size_t from, std::size_t to) const {
  const std::size_t n = up_.size();
  std::vector<std::size_t> prev(n, n);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    if (cur == to) break;
    for (std::size_t nxt = 0; nxt < n; ++nxt) {
      if (!seen[nxt] && comparable(cur, nxt)) {
        seen[nxt] = true;
        prev[nxt] = cur;
        queue.push_back(nxt);
      }
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<std::size_t> chain{to};
  while (chain.back() != from) chain.push_back(prev[chain.back()]);
  return std::vector<std::size_t>(chain.rbegin(), chain.rend());
}

std::set<ElementBits> iota_x_subbasis(const FuzzyTopology& topo) {
  require_small(topo.ground());
  std::set<ElementBits> family;
  const auto gammas = critical_gammas(topo);
  for (const auto& o : topo.opens()) {
    for (const auto& gamma : gammas) {
      ElementBits s = 0;
      for (std::size_t i = 0; i < o.set.size(); ++i) {
        if (o.set.at(i) > gamma) s |= bit(i);
      }
      family.insert(s);
    }
  }
  return family;
}

FiniteTopology iota_x(const FuzzyTopology& topo) {
  return FiniteTopology::generated_by(topo.ground(), iota_x_subbasis(topo));
}

std::set<ElementBits> slice_subbasis(const FuzzyTopology& topo) {
  require_small(topo.ground());
  std::set<ElementBits> family;
  const Rational zero(0);
  auto slice_of = [&](const CylinderOpen& c) {
    ElementBits s = 0;
    for (std::size_t i = 0; i < c.fibers().size(); ++i) {
      if (c.fiber(i).contains(zero)) s |= bit(i);
    }
    return s;
  };
  for (const auto& gamma : critical_gammas(topo)) {
    for (const auto& o : topo.opens()) family.insert(slice_of(subbasis_realize(TStar{o.name, gamma}, topo)));
    family.insert(slice_of(subbasis_realize(Pi2{gamma}, topo)));
  }
  return family;
}

bool slice_agrees(const FuzzyTopology& topo) { return slice_subbasis(topo) == iota_x_subbasis(topo); }

std::vector<std::vector<std::string>> connected_components(const FiniteTopology& ft) {
  const SpecializationPreorder pre(ft);
  const std::size_t n = pre.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (pre.comparable(x, y)) parent[find(x)] = find(y);
    }
  }
  std::vector<std::vector<std::string>> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t r = find(x);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(ft.ground()->name(x));
  }
  return out;
}

ConnectivityReport check_pc_lpc(const FuzzyTopology& topo) {
  ConnectivityReport r;
  r.components = connected_components(iota_x(topo));
  r.pc = r.components.size() == 1;
  return r;
}

OpenExpr component_cylinder_expr(const FuzzyTopology& topo, const std::vector<std::string>& component) {
  const FiniteTopology ft = iota_x(topo);
  const GroundSet& g = *topo.ground();
  ElementBits c = 0;
  for (const auto& name : component) c |= bit(g.index(name));
  if (!ft.is_open(c) || !ft.is_open(ft.full() & ~c)) {
    throw DomainError("component set is not clopen in the base topology");
  }

  // Every y outside C is separated from every x in C by some open T with
  // T(x) - T(y) >= 2*eps; a clause centred at level a then has fiber
  // (a - eps, a + eps) at x and nothing at such y.
  Rational eps(1, 2);
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (!((c >> x) & 1U)) continue;
    for (std::size_t y = 0; y < g.size(); ++y) {
      if ((c >> y) & 1U) continue;
      Rational best(0);
      for (const auto& o : topo.opens()) best = max(best, o.set.at(x) - o.set.at(y));
      if (best.is_zero()) throw DomainError("component set is not separated by the opens");
      eps = min(eps, best / Rational(2));
    }
  }

  OpenExpr expr;
  const Rational one(1), minus_one(-1);
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (!((c >> x) & 1U)) continue;
    for (Rational level(0); level < one; level += eps) {
      std::vector<SubbasisElem> clause{Pi2{max(minus_one, level - eps)}};
      for (const auto& o : topo.opens()) {
        clause.emplace_back(TStar{o.name, max(minus_one, o.set.at(x) - level - eps)});
      }
      expr.clauses.push_back(std::move(clause));
    }
  }
  return expr;
}

}  // namespace fuzzytop
