#pragma once

#include <string>

#include "fuzzytop/cylinder.hpp"

namespace fuzzytop {

/// A point (x, alpha) of X x J.
struct CylPoint {
  std::string x;
  Rational alpha;

  friend bool operator==(const CylPoint&, const CylPoint&) = default;
};

std::string to_string(const CylPoint& p);

/// Throws unless 0 <= alpha < 1.
void check_level(const Rational& alpha);

/// H(t,(x,a)) = (x,(1-t)a).
CylPoint h_eval(const Rational& t, const CylPoint& p);
/// Restriction of H to t = 1: collapse onto the slice X x {0}.
CylPoint sigma_eval(const CylPoint& p);

/// Exact image of t_interval x region under H, fiber by fiber.
CylinderOpen h_image_of_box(const Interval& t_interval, const CylinderOpen& region);

/// Product neighbourhood t_interval x region of an anchor (t, point) whose
/// H-image sits inside the realization of `target`.
struct BoxWitness {
  Interval t_interval;
  OpenExpr region_expr;
  CylinderOpen region;
  SubbasisElem target;
  Rational anchor_t;
  CylPoint anchor_point;
};

/// Which branch of the continuity argument produced a witness.
enum class WitnessCase { t_zero, t_interior, t_one };
WitnessCase witness_case(const Rational& t);
const char* to_string(WitnessCase c);

/// Builds a witness for continuity of H at (t, p) against `target`, choosing
/// epsilon as half the largest admissible value in the relevant case.
/// Throws DomainError if H(t, p) is not in the target.
BoxWitness continuity_witness(const Rational& t, const CylPoint& p, const SubbasisElem& target,
                              const FuzzyTopology& topo);

struct WitnessCheck {
  bool ok = false;
  bool anchor_inside = false;
  bool region_realizes = false;
  bool image_inside = false;
};

WitnessCheck check_witness(const BoxWitness& w, const FuzzyTopology& topo);
inline bool verify_witness(const BoxWitness& w, const FuzzyTopology& topo) { return check_witness(w, topo).ok; }

/// sigma(e) as a subset of X x J (supported on the slice).
CylinderOpen sigma_image_subbasis(const SubbasisElem& e, const FuzzyTopology& topo);
/// sigma of an arbitrary cylinder set: {(x,0) : fiber(x) nonempty}.
CylinderOpen sigma_image(const CylinderOpen& c);
/// The slice X x {0} intersected with c.
CylinderOpen slice_part(const CylinderOpen& c);

}  // namespace fuzzytop
