#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuzzytop/retraction.hpp"

namespace fuzzytop {

/// Membership of a cylinder set sampled at the levels 0, 1/N, ..., (N-1)/N.
struct GridOracle {
  long resolution = 0;
  GroundRef ground;
  std::vector<std::vector<bool>> cells;  // cells[element][k] <-> level k/N

  [[nodiscard]] static GridOracle blank(GroundRef ground, long n);
  [[nodiscard]] Rational level(long k) const { return Rational(k, resolution); }
};

GridOracle oracle_rasterize(const CylinderOpen& c, long n);

struct GridMismatch {
  std::string element;
  Rational level;
  bool symbolic = false;
  bool brute = false;
};

struct OracleVerdict {
  bool equal = true;
  std::optional<GridMismatch> first;
};

OracleVerdict oracle_compare(const CylinderOpen& symbolic, const GridOracle& brute);

// Brute counterparts, evaluated cell by cell from the defining inequalities.
GridOracle brute_psi_star(const FuzzySet& f, long n);
GridOracle brute_subbasis(const SubbasisElem& e, const FuzzyTopology& topo, long n);
GridOracle brute_meet(const GridOracle& a, const GridOracle& b);
GridOracle brute_join(const GridOracle& a, const GridOracle& b);
GridOracle brute_complement(const GridOracle& a);
/// sigma of a subbasis element: (x,0) is hit iff the element meets {x} x J.
GridOracle brute_sigma_subbasis(const SubbasisElem& e, const FuzzyTopology& topo, long n);
/// Cell (x, v) is hit iff (1-t) a = v for some t in the interval and a in the fiber.
GridOracle brute_h_image(const Interval& t_interval, const CylinderOpen& region, long n);

}  // namespace fuzzytop
