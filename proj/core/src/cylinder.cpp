#include "fuzzytop/cylinder.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace fuzzytop {

CylinderOpen::CylinderOpen(GroundRef ground, std::vector<IntervalSet> fibers)
    : ground_(std::move(ground)), fibers_(std::move(fibers)) {
  if (!ground_) throw DomainError("cylinder set without ground set");
  if (fibers_.size() != ground_->size()) throw DomainError("cylinder set must have one fiber per element");
}

CylinderOpen CylinderOpen::empty(GroundRef ground) { return uniform(std::move(ground), IntervalSet{}); }

CylinderOpen CylinderOpen::whole(GroundRef ground) {
  return uniform(std::move(ground), IntervalSet::of(unit_segment()));
}

CylinderOpen CylinderOpen::uniform(GroundRef ground, const IntervalSet& fiber) {
  const std::size_t n = ground ? ground->size() : 0;
  return CylinderOpen(std::move(ground), std::vector<IntervalSet>(n, fiber));
}

bool CylinderOpen::is_empty() const {
  return std::all_of(fibers_.begin(), fibers_.end(), [](const IntervalSet& f) { return f.empty(); });
}

CylinderOpen CylinderOpen::unite(const CylinderOpen& o) const {
  require_same_ground(ground_, o.ground_);
  std::vector<IntervalSet> out(fibers_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = iv_union(fibers_[i], o.fibers_[i]);
  return CylinderOpen(ground_, std::move(out));
}

CylinderOpen CylinderOpen::intersect(const CylinderOpen& o) const {
  require_same_ground(ground_, o.ground_);
  std::vector<IntervalSet> out(fibers_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = iv_intersect(fibers_[i], o.fibers_[i]);
  return CylinderOpen(ground_, std::move(out));
}

bool CylinderOpen::subset_of(const CylinderOpen& o) const {
  require_same_ground(ground_, o.ground_);
  for (std::size_t i = 0; i < fibers_.size(); ++i) {
    if (!fibers_[i].subset_of(o.fibers_[i])) return false;
  }
  return true;
}

std::string CylinderOpen::str() const {
  const bool uniform_fibers =
      std::all_of(fibers_.begin(), fibers_.end(), [&](const IntervalSet& f) { return f == fibers_.front(); });
  if (uniform_fibers) {
    if (fibers_.front().empty()) return "∅";
    return "X × " + fibers_.front().str();
  }
  std::string s;
  for (std::size_t i = 0; i < fibers_.size(); ++i) {
    if (i) s += ", ";
    s += "{" + ground_->name(i) + "} × " + fibers_[i].str();
  }
  return s;
}

void check_gamma(const Rational& gamma) {
  if (gamma < Rational(-1) || gamma >= Rational(1)) {
    throw DomainError("gamma outside [-1,1): " + gamma.str());
  }
}

const Rational& gamma_of(const SubbasisElem& e) {
  return std::visit([](const auto& s) -> const Rational& { return s.gamma; }, e);
}

std::string to_string(const SubbasisElem& e) {
  if (const auto* t = std::get_if<TStar>(&e)) return "tstar(" + t->open_name + "," + t->gamma.str() + ")";
  return "pi2(" + std::get<Pi2>(e).gamma.str() + ")";
}

CylinderOpen psi_star(const FuzzySet& f) {
  std::vector<IntervalSet> fibers;
  fibers.reserve(f.size());
  for (const auto& v : f.values()) fibers.push_back(make_interval(Rational(0), v, true, false));
  return CylinderOpen(f.ground(), std::move(fibers));
}

FuzzySet recover_membership(const CylinderOpen& c) {
  std::vector<Rational> values;
  values.reserve(c.fibers().size());
  for (std::size_t i = 0; i < c.fibers().size(); ++i) {
    const IntervalSet& fib = c.fiber(i);
    if (fib.empty()) {
      values.emplace_back(0);
      continue;
    }
    const Interval& p = fib.parts().front();
    const bool down_closed = fib.size() == 1 && p.lo.is_zero() && p.lo_closed && !p.hi_closed && !p.is_point();
    if (!down_closed) {
      throw DomainError("fiber at '" + c.ground()->name(i) + "' is not of the form [0,v): " + fib.str());
    }
    values.push_back(*iv_supremum(fib));
  }
  return FuzzySet(c.ground(), std::move(values));
}

IntervalSet tstar_fiber(const Rational& membership, const Rational& gamma) {
  // T(x) - a > gamma  <=>  a < T(x) - gamma; T(x) - a <= 1 always holds on J.
  const Rational bound = membership - gamma;
  if (bound.sign() <= 0) return {};
  return make_interval(Rational(0), min(bound, Rational(1)), true, false);
}

CylinderOpen subbasis_realize(const SubbasisElem& e, const FuzzyTopology& topo) {
  check_gamma(gamma_of(e));
  if (const auto* t = std::get_if<TStar>(&e)) {
    const FuzzySet& f = topo.open(t->open_name);
    std::vector<IntervalSet> fibers;
    fibers.reserve(f.size());
    for (const auto& v : f.values()) fibers.push_back(tstar_fiber(v, t->gamma));
    return CylinderOpen(topo.ground(), std::move(fibers));
  }
  const Rational& gamma = std::get<Pi2>(e).gamma;
  if (gamma.sign() < 0) return CylinderOpen::whole(topo.ground());
  return CylinderOpen::uniform(topo.ground(), make_interval(gamma, Rational(1), false, false));
}

CylinderOpen open_realize(const OpenExpr& expr, const FuzzyTopology& topo) {
  CylinderOpen acc = CylinderOpen::empty(topo.ground());
  for (const auto& clause : expr.clauses) {
    if (clause.empty()) throw DomainError("open expression clause must be nonempty");
    CylinderOpen meet = subbasis_realize(clause.front(), topo);
    for (std::size_t k = 1; k < clause.size(); ++k) meet = meet.intersect(subbasis_realize(clause[k], topo));
    acc = acc.unite(meet);
  }
  return acc;
}

bool cyl_contains(const CylinderOpen& c, const std::string& x, const Rational& alpha) {
  return iv_contains(c.fiber(x), alpha);
}

CylinderOpen cyl_complement(const CylinderOpen& c) {
  std::vector<IntervalSet> out;
  out.reserve(c.fibers().size());
  for (const auto& f : c.fibers()) out.push_back(iv_complement_in_J(f));
  return CylinderOpen(c.ground(), std::move(out));
}

CompatReport complement_compat(const FuzzySet& f) {
  CompatReport r{true, psi_star(fz_complement(f)), cyl_complement(psi_star(f)), std::nullopt, std::nullopt};
  for (std::size_t i = 0; i < f.size(); ++i) {
    const IntervalSet& a = r.psi_of_complement.fiber(i);
    const IntervalSet& b = r.complement_of_psi.fiber(i);
    if (a == b) continue;
    r.equal = false;
    const IntervalSet only_a = a.intersect(b.complement_within(unit_segment()));
    const IntervalSet only_b = b.intersect(a.complement_within(unit_segment()));
    r.witness_element = f.ground()->name(i);
    r.witness_level = only_a.empty() ? *only_b.sample_point() : *only_a.sample_point();
    break;
  }
  return r;
}

LawReport verify_psi_laws(const FuzzyTopology& topo, std::size_t max_family, std::size_t union_budget) {
  const ValidationReport valid = fz_is_topology(topo.ground(), topo.opens());
  if (!valid.ok) throw DomainError("invalid topology: " + valid.message);

  const auto& opens = topo.opens();
  const std::size_t n = opens.size();
  std::vector<CylinderOpen> psi;
  psi.reserve(n);
  for (const auto& o : opens) psi.push_back(psi_star(o.set));

  LawReport report;
  auto check_union = [&](const std::vector<std::size_t>& idx) {
    ++report.checks;
    CylinderOpen lhs = psi[idx.front()];
    std::vector<FuzzySet> family{opens[idx.front()].set};
    for (std::size_t k = 1; k < idx.size(); ++k) {
      lhs = lhs.unite(psi[idx[k]]);
      family.push_back(opens[idx[k]].set);
    }
    if (lhs == psi_star(fz_join(family))) return true;
    report.ok = false;
    report.law = "join";
    for (auto k : idx) report.witness_opens.push_back(opens[k].name);
    return false;
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      ++report.checks;
      if (psi[i].intersect(psi[j]) != psi_star(fz_meet(opens[i].set, opens[j].set))) {
        report.ok = false;
        report.law = "meet";
        report.witness_opens = {opens[i].name, opens[j].name};
        return report;
      }
      if (i != j && !check_union({i, j})) return report;
    }
  }

  // Larger sub-families: all of them when they fit the budget, otherwise a
  // sample drawn from a generator seeded by the family count.
  double larger = 0;
  for (std::size_t k = 3; k <= max_family && k <= n; ++k) {
    double c = 1;
    for (std::size_t r = 0; r < k; ++r) c = c * static_cast<double>(n - r) / static_cast<double>(r + 1);
    larger += c;
  }
  std::vector<std::size_t> pick;
  if (larger <= static_cast<double>(union_budget)) {
    std::function<bool(std::size_t)> recurse = [&](std::size_t start) {
      if (pick.size() >= 3 && !check_union(pick)) return false;
      if (pick.size() == max_family) return true;
      for (std::size_t k = start; k < n; ++k) {
        pick.push_back(k);
        const bool ok = recurse(k + 1);
        pick.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    if (!recurse(0)) return report;
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(n);
    std::vector<std::size_t> all(n);
    for (std::size_t k = 0; k < n; ++k) all[k] = k;
    std::uniform_int_distribution<std::size_t> size_dist(3, max_family);
    for (std::size_t s = 0; s < union_budget; ++s) {
      std::shuffle(all.begin(), all.end(), rng);
      pick.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size_dist(rng)));
      if (!check_union(pick)) return report;
    }
  }

  std::vector<std::size_t> all(n);
  for (std::size_t k = 0; k < n; ++k) all[k] = k;
  check_union(all);
  return report;
}

std::vector<Rational> critical_gammas(const FuzzyTopology& topo) {
  std::set<Rational> values{Rational(0), Rational(1)};
  for (const auto& o : topo.opens()) values.insert(o.set.values().begin(), o.set.values().end());
  std::set<Rational> out{Rational(-1), Rational(-1, 2)};
  const std::vector<Rational> sorted(values.begin(), values.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    out.insert(sorted[i]);
    out.insert((sorted[i] + sorted[i + 1]) / Rational(2));
  }
  return {out.begin(), out.end()};
}

}  // namespace fuzzytop
