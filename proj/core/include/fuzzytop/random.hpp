#pragma once

#include <cstdint>
#include <random>

#include "fuzzytop/path.hpp"

namespace fuzzytop {

/// Seeded generators for the randomized law sweeps.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  long uniform(long lo, long hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// p/q with 1 <= q <= max_den, in [0,1].
  Rational unit(long max_den);
  /// In J = [0,1).
  Rational level(long max_den);
  /// In [-1,1).
  Rational gamma(long max_den);

  /// Elements a, b, c, ... of a random size in [1, max_size].
  GroundRef ground(std::size_t max_size);
  FuzzySet fuzzy(const GroundRef& g, long max_den);
  /// Topology generated by 1..max_gens random fuzzy sets.
  FuzzyTopology topology(const GroundRef& g, std::size_t max_gens, long max_den);
  SubbasisElem subbasis(const FuzzyTopology& topo, long max_den);
  CylPoint point(const GroundRef& g, long max_den);

  /// A random DSL path starting at `from`, with at most max_parts pieces.
  PathExpr path_from(const CylPoint& from, const FiniteTopology& base, long max_den, std::size_t max_parts);
  PathExpr path(const FiniteTopology& base, long max_den, std::size_t max_parts);

 private:
  PathExpr piece(const CylPoint& from, const FiniteTopology& base, long max_den, int depth);

  std::mt19937_64 rng_;
};

}  // namespace fuzzytop
