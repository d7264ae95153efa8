#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fuzzytop/base_space.hpp"
#include "fuzzytop/retraction.hpp"

namespace fuzzytop {

/// A path in the slice X x {0} along consecutive comparable elements of the
/// specialization preorder. Segment i of k covers [i/k, (i+1)/k]; the fence
/// point x_i sits at u = i/k and the open segment carries whichever of the
/// two endpoints is higher in the preorder, which keeps every preimage open.
class FencePath {
 public:
  static FencePath make(std::vector<std::string> steps, const FiniteTopology& base);

  [[nodiscard]] const std::vector<std::string>& steps() const { return steps_; }
  /// Element occupying the open interior of each segment.
  [[nodiscard]] const std::vector<std::string>& interiors() const { return interiors_; }
  [[nodiscard]] std::size_t segments() const { return interiors_.size(); }
  [[nodiscard]] std::string at(const Rational& u) const;

  friend bool operator==(const FencePath&, const FencePath&) = default;

 private:
  std::vector<std::string> steps_;
  std::vector<std::string> interiors_;
};

/// Closed-form path I -> X x J. Immutable; subtrees are shared.
class PathExpr {
 public:
  struct Const;
  struct Vertical;
  struct HLift;
  struct Concat;
  struct Reverse;
  struct HTransform;
  struct ChiBoundary;
  struct Node;

  static PathExpr constant(CylPoint p);
  /// u -> (x, a0 + (a1 - a0) u), with a0, a1 in J.
  static PathExpr vertical(std::string x, Rational a0, Rational a1);
  /// u -> (base(u), level).
  static PathExpr hlift(FencePath base, Rational level);
  /// Left-nested halving concatenation; consecutive parts must meet exactly.
  static PathExpr concat(std::vector<PathExpr> parts);
  static PathExpr reverse(PathExpr inner);
  /// u -> H(t, inner(u)).
  static PathExpr htransform(Rational t, PathExpr inner);
  /// x -> H(kappa(s,t)(x), rho(end)), end in {0,1}.
  static PathExpr chi_boundary(PathExpr rho, Rational s, Rational t, int end);

  [[nodiscard]] const Node& node() const { return *node_; }
  [[nodiscard]] CylPoint start() const;
  [[nodiscard]] CylPoint finish() const;

 private:
  explicit PathExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct PathExpr::Const {
  CylPoint p;
};
struct PathExpr::Vertical {
  std::string x;
  Rational a0;
  Rational a1;
};
struct PathExpr::HLift {
  FencePath base;
  Rational level;
};
struct PathExpr::Concat {
  std::vector<PathExpr> parts;
};
struct PathExpr::Reverse {
  PathExpr inner;
};
struct PathExpr::HTransform {
  Rational t;
  PathExpr inner;
};
struct PathExpr::ChiBoundary {
  PathExpr rho;
  Rational s;
  Rational t;
  int end;
};
struct PathExpr::Node {
  std::variant<Const, Vertical, HLift, Concat, Reverse, HTransform, ChiBoundary> v;
};

/// Level c0 + c1*u at element x, on one open stretch of the parameter.
struct AffinePiece {
  std::string x;
  Rational c0;
  Rational c1;

  [[nodiscard]] Rational level(const Rational& u) const { return c0 + c1 * u; }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// Canonical piecewise-affine description of a path: breakpoints
/// 0 = b_0 < ... < b_m = 1, the exact value at each breakpoint, and an affine
/// piece on each open gap. Adjacent gaps are merged whenever the function is a
/// single affine piece across the breakpoint, so equal paths have equal forms.
struct PathNormalForm {
  std::vector<Rational> breaks;
  std::vector<CylPoint> values;
  std::vector<AffinePiece> gaps;

  [[nodiscard]] CylPoint eval(const Rational& u) const;
  /// The form of eta -> f(a + eta (b - a)), 0 <= a < b <= 1.
  [[nodiscard]] PathNormalForm restrict(const Rational& a, const Rational& b) const;

  friend bool operator==(const PathNormalForm&, const PathNormalForm&) = default;
};

PathNormalForm normal_form(const PathExpr& e);

/// (t - s) x + s; all arguments in [0,1].
Rational kappa(const Rational& s, const Rational& t, const Rational& x);
CylPoint eval_path(const PathExpr& e, const Rational& u);
/// H(kappa(s,t)(x), rho(eta)).
CylPoint chi_eval(const PathExpr& rho, const Rational& s, const Rational& t, const Rational& eta,
                  const Rational& x);
CylPoint chi_eval(const PathNormalForm& rho, const Rational& s, const Rational& t, const Rational& eta,
                  const Rational& x);
/// The boundary path of the chi square at rho(end), as a vertical path.
PathExpr chi_boundary(const PathExpr& rho, const Rational& s, const Rational& t, int end);

struct ContainmentResult {
  bool inside = true;
  std::optional<CylPoint> witness;  // a point of the path outside the set
};

/// Exact image containment of a path in a cylinder set.
ContainmentResult path_in_open(const PathExpr& e, const CylinderOpen& open);
/// {u in I : e(u) in target}.
IntervalSet path_preimage(const PathExpr& e, const CylinderOpen& target);
IntervalSet path_preimage(const PathNormalForm& f, const CylinderOpen& target);
/// True iff the preimage of the realized target is open in I.
bool path_preimage_open(const PathExpr& e, const SubbasisElem& target, const FuzzyTopology& topo);
bool path_preimage_open(const PathNormalForm& f, const SubbasisElem& target, const FuzzyTopology& topo);

/// p_{F,(y,(z,beta))}(u) = H(kappa(F(y),1-F(y))(u), (z,beta)).
PathExpr functor_object_path(const FuzzySet& f, const std::string& y, const std::string& z, const Rational& beta);

/// Vertical drop, horizontal lift along a fence at level 0, vertical rise.
/// Nullopt when the two base points lie in different path components.
std::optional<PathExpr> connecting_path(const FuzzyTopology& topo, const CylPoint& from, const CylPoint& to);

}  // namespace fuzzytop
