#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fuzzytop/fuzzy.hpp"
#include "fuzzytop/interval_set.hpp"

namespace fuzzytop {

/// A subset of X x J stored fiberwise: one canonical IntervalSet per element.
class CylinderOpen {
 public:
  CylinderOpen(GroundRef ground, std::vector<IntervalSet> fibers);
  static CylinderOpen empty(GroundRef ground);
  static CylinderOpen whole(GroundRef ground);
  /// Every fiber equal to `fiber`.
  static CylinderOpen uniform(GroundRef ground, const IntervalSet& fiber);

  [[nodiscard]] const GroundRef& ground() const { return ground_; }
  [[nodiscard]] const std::vector<IntervalSet>& fibers() const { return fibers_; }
  [[nodiscard]] const IntervalSet& fiber(std::size_t i) const { return fibers_.at(i); }
  [[nodiscard]] const IntervalSet& fiber(const std::string& x) const { return fibers_.at(ground_->index(x)); }
  [[nodiscard]] bool is_empty() const;

  [[nodiscard]] CylinderOpen unite(const CylinderOpen& o) const;
  [[nodiscard]] CylinderOpen intersect(const CylinderOpen& o) const;
  [[nodiscard]] bool subset_of(const CylinderOpen& o) const;

  /// "X × [0,1/3)" when all fibers agree, otherwise a per-element listing.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const CylinderOpen& a, const CylinderOpen& b) {
    return *a.ground_ == *b.ground_ && a.fibers_ == b.fibers_;
  }

 private:
  GroundRef ground_;
  std::vector<IntervalSet> fibers_;
};

/// (T*)^-1((gamma,1]) where T*(x,a) = T(x) - a.
struct TStar {
  std::string open_name;
  Rational gamma;
  friend bool operator==(const TStar&, const TStar&) = default;
};

/// (pi_2)^-1((gamma,1]) = {(x,a) : a > gamma}.
struct Pi2 {
  Rational gamma;
  friend bool operator==(const Pi2&, const Pi2&) = default;
};

using SubbasisElem = std::variant<TStar, Pi2>;

/// Throws unless -1 <= gamma < 1.
void check_gamma(const Rational& gamma);
const Rational& gamma_of(const SubbasisElem& e);
std::string to_string(const SubbasisElem& e);

/// Union of clauses; each clause is a nonempty intersection of subbasis elements.
struct OpenExpr {
  std::vector<std::vector<SubbasisElem>> clauses;
  friend bool operator==(const OpenExpr&, const OpenExpr&) = default;
};

CylinderOpen psi_star(const FuzzySet& f);
/// Inverse of psi_star; throws unless every fiber is empty or [0,v).
FuzzySet recover_membership(const CylinderOpen& c);
CylinderOpen subbasis_realize(const SubbasisElem& e, const FuzzyTopology& topo);
/// Fiber of a TStar realization for a single membership value.
IntervalSet tstar_fiber(const Rational& membership, const Rational& gamma);
CylinderOpen open_realize(const OpenExpr& expr, const FuzzyTopology& topo);
bool cyl_contains(const CylinderOpen& c, const std::string& x, const Rational& alpha);
/// Fiberwise complement in J; the result is a point set, not necessarily open.
CylinderOpen cyl_complement(const CylinderOpen& c);

struct CompatReport {
  bool equal = true;
  CylinderOpen psi_of_complement;  // psi_star(1 - f)
  CylinderOpen complement_of_psi;  // (X x J) minus psi_star(f)
  // A point in the symmetric difference when unequal.
  std::optional<std::string> witness_element;
  std::optional<Rational> witness_level;
};

CompatReport complement_compat(const FuzzySet& f);

struct LawReport {
  bool ok = true;
  std::size_t checks = 0;
  std::string law;          // "meet" or "join" for the first failure
  std::vector<std::string> witness_opens;
  bool exhaustive = true;   // false when larger sub-families were sampled
};

/// Checks psi(T1) ∩ psi(T2) = psi(T1 ∧ T2) and the union law for all pairs,
/// the union law for sub-families of size 3..max_family, and the full family.
/// Sub-families of size >= 3 are enumerated when there are at most
/// union_budget of them and sampled (union_budget draws) otherwise.
LawReport verify_psi_laws(const FuzzyTopology& topo, std::size_t max_family = 4, std::size_t union_budget = 4000);

/// Gamma values at which some T^-1((gamma,1]) changes, plus representatives of
/// every constant stretch between them: -1, each distinct membership value v,
/// and the midpoint between consecutive values (or just below the smallest positive one).
std::vector<Rational> critical_gammas(const FuzzyTopology& topo);

}  // namespace fuzzytop
