#include "fuzzytop/oracle.hpp"

#include <algorithm>
#include <set>

namespace fuzzytop {

namespace {

void check_resolution(long n) {
  if (n < 2) throw DomainError("grid resolution must be at least 2");
}

void check_shape(const GridOracle& a, const GridOracle& b) {
  if (a.resolution != b.resolution) throw DomainError("grid resolutions differ");
  require_same_ground(a.ground, b.ground);
}

template <class Pred>
GridOracle fill(GroundRef ground, long n, Pred pred) {
  GridOracle g = GridOracle::blank(std::move(ground), n);
  for (std::size_t i = 0; i < g.cells.size(); ++i) {
    for (long k = 0; k < n; ++k) g.cells[i][static_cast<std::size_t>(k)] = pred(i, Rational(k, n));
  }
  return g;
}

template <class Op>
GridOracle combine(const GridOracle& a, const GridOracle& b, Op op) {
  check_shape(a, b);
  GridOracle g = a;
  for (std::size_t i = 0; i < g.cells.size(); ++i) {
    for (std::size_t k = 0; k < g.cells[i].size(); ++k) g.cells[i][k] = op(a.cells[i][k], b.cells[i][k]);
  }
  return g;
}

bool hit_at(const Interval& t_interval, const IntervalSet& fiber, const Rational& v) {
  const Rational zero(0), one(1);
  if (fiber.empty() || t_interval.empty()) return false;
  if (v.is_zero()) return t_interval.contains(one) || fiber.contains(zero);
  // Feasible t form finitely many intervals whose ends are among these
  // candidates, so testing them and the midpoints between them suffices.
  std::set<Rational> cand{t_interval.lo, t_interval.hi};
  for (const auto& p : fiber.parts()) {
    for (const Rational& e : {p.lo, p.hi}) {
      if (e.is_zero()) continue;
      const Rational t = one - v / e;
      if (t >= zero && t <= one) cand.insert(t);
    }
  }
  std::vector<Rational> pts(cand.begin(), cand.end());
  const std::size_t ends = pts.size();
  for (std::size_t i = 0; i + 1 < ends; ++i) pts.push_back((pts[i] + pts[i + 1]) / Rational(2));
  return std::any_of(pts.begin(), pts.end(), [&](const Rational& t) {
    return t_interval.contains(t) && t < one && fiber.contains(v / (one - t));
  });
}

}  // namespace

GridOracle GridOracle::blank(GroundRef ground, long n) {
  check_resolution(n);
  GridOracle g;
  g.resolution = n;
  g.cells.assign(ground->size(), std::vector<bool>(static_cast<std::size_t>(n), false));
  g.ground = std::move(ground);
  return g;
}

GridOracle oracle_rasterize(const CylinderOpen& c, long n) {
  return fill(c.ground(), n, [&](std::size_t i, const Rational& a) { return c.fiber(i).contains(a); });
}

OracleVerdict oracle_compare(const CylinderOpen& symbolic, const GridOracle& brute) {
  const GridOracle mine = oracle_rasterize(symbolic, brute.resolution);
  check_shape(mine, brute);
  for (std::size_t i = 0; i < mine.cells.size(); ++i) {
    for (std::size_t k = 0; k < mine.cells[i].size(); ++k) {
      if (mine.cells[i][k] != brute.cells[i][k]) {
        return {false, GridMismatch{mine.ground->name(i), brute.level(static_cast<long>(k)), mine.cells[i][k],
                                    brute.cells[i][k]}};
      }
    }
  }
  return {};
}

GridOracle brute_psi_star(const FuzzySet& f, long n) {
  return fill(f.ground(), n, [&](std::size_t i, const Rational& a) { return f.at(i) > a; });
}

GridOracle brute_subbasis(const SubbasisElem& e, const FuzzyTopology& topo, long n) {
  check_gamma(gamma_of(e));
  if (const auto* ts = std::get_if<TStar>(&e)) {
    const FuzzySet& t = topo.open(ts->open_name);
    return fill(topo.ground(), n, [&](std::size_t i, const Rational& a) { return t.at(i) - a > ts->gamma; });
  }
  const Rational& g = std::get<Pi2>(e).gamma;
  return fill(topo.ground(), n, [&](std::size_t, const Rational& a) { return a > g; });
}

GridOracle brute_meet(const GridOracle& a, const GridOracle& b) {
  return combine(a, b, [](bool p, bool q) { return p && q; });
}

GridOracle brute_join(const GridOracle& a, const GridOracle& b) {
  return combine(a, b, [](bool p, bool q) { return p || q; });
}

GridOracle brute_complement(const GridOracle& a) {
  return combine(a, a, [](bool p, bool) { return !p; });
}

GridOracle brute_sigma_subbasis(const SubbasisElem& e, const FuzzyTopology& topo, long n) {
  const Rational zero(0);
  const auto* ts = std::get_if<TStar>(&e);
  return fill(topo.ground(), n, [&](std::size_t i, const Rational& a) {
    if (a != zero) return false;
    // Pi2 targets always reach some level below 1; T* - a is largest at a = 0.
    return ts == nullptr || topo.open(ts->open_name).at(i) > ts->gamma;
  });
}

GridOracle brute_h_image(const Interval& t_interval, const CylinderOpen& region, long n) {
  return fill(region.ground(), n,
              [&](std::size_t i, const Rational& v) { return hit_at(t_interval, region.fiber(i), v); });
}

}  // namespace fuzzytop
