#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fuzzytop/cylinder.hpp"
#include "fuzzytop/fuzzy.hpp"

namespace fuzzytop {

/// Subsets of a ground set with at most 64 elements, bit i <-> element i.
using ElementBits = std::uint64_t;

/// A topology on a finite ground set, opens stored as sorted bit sets.
class FiniteTopology {
 public:
  /// Closes `family` under pairwise intersection and union and adds ∅ and X.
  static FiniteTopology generated_by(GroundRef ground, const std::set<ElementBits>& family);

  [[nodiscard]] const GroundRef& ground() const { return ground_; }
  [[nodiscard]] const std::set<ElementBits>& opens() const { return opens_; }
  [[nodiscard]] ElementBits full() const;
  [[nodiscard]] bool is_open(ElementBits s) const { return opens_.count(s) != 0; }
  /// Smallest open containing element i.
  [[nodiscard]] ElementBits minimal_open(std::size_t i) const;
  [[nodiscard]] std::vector<std::string> names(ElementBits s) const;

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return *a.ground_ == *b.ground_ && a.opens_ == b.opens_;
  }

 private:
  FiniteTopology(GroundRef ground, std::set<ElementBits> opens);

  GroundRef ground_;
  std::set<ElementBits> opens_;
};

/// x <= y iff every open containing x contains y.
class SpecializationPreorder {
 public:
  explicit SpecializationPreorder(const FiniteTopology& ft);

  [[nodiscard]] bool leq(std::size_t x, std::size_t y) const { return (up_[x] >> y) & 1U; }
  [[nodiscard]] bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }
  [[nodiscard]] std::size_t size() const { return up_.size(); }
  /// Shortest chain of consecutive comparable elements from `from` to `to`.
  [[nodiscard]] std::optional<std::vector<std::size_t>> fence(std::size_t from, std::size_t to) const;

 private:
  std::vector<ElementBits> up_;
};

/// Subbasis {T^-1((gamma,1])} of the initial topology on X, over the critical gammas.
std::set<ElementBits> iota_x_subbasis(const FuzzyTopology& topo);
FiniteTopology iota_x(const FuzzyTopology& topo);

/// Subsets of X cut out by the subbasis of ι(T) on the slice X × {0}.
std::set<ElementBits> slice_subbasis(const FuzzyTopology& topo);
/// True iff the slice subbasis projected to X equals the subbasis of ι_X(T).
bool slice_agrees(const FuzzyTopology& topo);

std::vector<std::vector<std::string>> connected_components(const FiniteTopology& ft);

struct ConnectivityReport {
  bool pc = false;
  bool lpc = true;  // every finite space is locally path-connected
  std::string lpc_reason = "finite space";
  std::vector<std::vector<std::string>> components;
};

ConnectivityReport check_pc_lpc(const FuzzyTopology& topo);

/// An open expression realizing C × J for a union C of path components.
/// Together with the expression for the complementary components this
/// exhibits the cylinder as disconnected.
OpenExpr component_cylinder_expr(const FuzzyTopology& topo, const std::vector<std::string>& component);

}  // namespace fuzzytop
