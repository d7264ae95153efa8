#include "fuzzytop/random.hpp"

namespace fuzzytop {

long Gen::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Rational Gen::unit(long max_den) {
  const long q = uniform(1, max_den);
  return Rational(uniform(0, q), q);
}

Rational Gen::level(long max_den) {
  const long q = uniform(1, max_den);
  return Rational(uniform(0, q - 1), q);
}

Rational Gen::gamma(long max_den) {
  const long q = uniform(1, max_den);
  return Rational(uniform(-q, q - 1), q);
}

GroundRef Gen::ground(std::size_t max_size) {
  const auto n = static_cast<std::size_t>(uniform(1, static_cast<long>(max_size)));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return make_ground(std::move(names));
}

FuzzySet Gen::fuzzy(const GroundRef& g, long max_den) {
  std::vector<Rational> v;
  v.reserve(g->size());
  for (std::size_t i = 0; i < g->size(); ++i) v.push_back(unit(max_den));
  return FuzzySet(g, std::move(v));
}

FuzzyTopology Gen::topology(const GroundRef& g, std::size_t max_gens, long max_den) {
  const auto k = static_cast<std::size_t>(uniform(1, static_cast<long>(max_gens)));
  std::vector<FuzzySet> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(fuzzy(g, max_den));
  return fz_generate_topology(g, gens);
}

SubbasisElem Gen::subbasis(const FuzzyTopology& topo, long max_den) {
  if (uniform(0, 3) == 0) return Pi2{gamma(max_den)};
  const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(topo.size()) - 1));
  return TStar{topo.opens()[i].name, gamma(max_den)};
}

CylPoint Gen::point(const GroundRef& g, long max_den) {
  const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(g->size()) - 1));
  return {g->name(i), level(max_den)};
}

PathExpr Gen::piece(const CylPoint& from, const FiniteTopology& base, long max_den, int depth) {
  const Rational zero(0);
  switch (uniform(0, depth > 0 ? 6 : 5)) {
    case 0:
      return PathExpr::vertical(from.x, from.alpha, level(max_den));
    case 1:
      return PathExpr::reverse(PathExpr::vertical(from.x, level(max_den), from.alpha));
    case 2: {
      // Random walk through comparable elements.
      const GroundSet& g = *base.ground();
      const SpecializationPreorder pre(base);
      std::vector<std::string> steps{from.x};
      const long len = uniform(1, 3);
      for (long s = 0; s < len; ++s) {
        const std::size_t cur = g.index(steps.back());
        std::vector<std::size_t> next;
        for (std::size_t y = 0; y < g.size(); ++y) {
          if (pre.comparable(cur, y)) next.push_back(y);
        }
        steps.push_back(g.name(next[static_cast<std::size_t>(uniform(0, static_cast<long>(next.size()) - 1))]));
      }
      return PathExpr::hlift(FencePath::make(std::move(steps), base), from.alpha);
    }
    case 3:
      return PathExpr::htransform(zero, PathExpr::vertical(from.x, from.alpha, level(max_den)));
    case 4:
      return PathExpr::chi_boundary(PathExpr::constant(from), zero, unit(max_den), 0);
    case 5:
      return PathExpr::constant(from);
    default: {
      const PathExpr first = piece(from, base, max_den, depth - 1);
      return PathExpr::concat({first, piece(first.finish(), base, max_den, depth - 1)});
    }
  }
}

PathExpr Gen::path_from(const CylPoint& from, const FiniteTopology& base, long max_den, std::size_t max_parts) {
  const auto n = static_cast<std::size_t>(uniform(1, static_cast<long>(max_parts)));
  std::vector<PathExpr> parts;
  CylPoint cur = from;
  for (std::size_t i = 0; i < n; ++i) {
    parts.push_back(piece(cur, base, max_den, 1));
    cur = parts.back().finish();
  }
  return n == 1 ? parts.front() : PathExpr::concat(std::move(parts));
}

PathExpr Gen::path(const FiniteTopology& base, long max_den, std::size_t max_parts) {
  PathExpr p = path_from(point(base.ground(), max_den), base, max_den, max_parts);
  switch (uniform(0, 3)) {
    case 0: return PathExpr::reverse(std::move(p));
    case 1: return PathExpr::htransform(unit(max_den), std::move(p));
    default: return p;
  }
}

}  // namespace fuzzytop
