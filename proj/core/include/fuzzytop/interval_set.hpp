#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzytop/rational.hpp"

namespace fuzzytop {

/// A nonempty interval with exact endpoints and per-side open/closed flags.
/// Only IntervalSet::normalize produces these, so `lo < hi` or a closed
/// degenerate point always holds.
struct Interval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = false;

  [[nodiscard]] bool contains(const Rational& q) const;
  [[nodiscard]] bool is_point() const { return lo == hi; }
  [[nodiscard]] bool empty() const {
    return hi < lo || (lo == hi && !(lo_closed && hi_closed));
  }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Canonical finite union of disjoint, sorted, non-mergeable intervals.
/// Structural equality coincides with set equality.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Builds the canonical form of an arbitrary list of (possibly empty,
  /// overlapping, unsorted) intervals.
  static IntervalSet normalize(std::vector<Interval> raw);
  static IntervalSet of(const Interval& iv) { return normalize({iv}); }

  [[nodiscard]] std::span<const Interval> parts() const { return parts_; }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] std::size_t size() const { return parts_.size(); }

  [[nodiscard]] IntervalSet unite(const IntervalSet& other) const;
  [[nodiscard]] IntervalSet intersect(const IntervalSet& other) const;
  /// Complement relative to the given universe interval.
  [[nodiscard]] IntervalSet complement_within(const Interval& universe) const;
  [[nodiscard]] bool contains(const Rational& q) const;
  [[nodiscard]] bool subset_of(const IntervalSet& other) const;
  [[nodiscard]] std::optional<Rational> supremum() const;
  [[nodiscard]] std::optional<Rational> infimum() const;
  /// Some member of the set, preferring closed endpoints; nullopt when empty.
  [[nodiscard]] std::optional<Rational> sample_point() const;
  /// True when every part is open relative to `universe`: a closed endpoint
  /// is only allowed where it coincides with a closed end of the universe.
  [[nodiscard]] bool is_relatively_open(const Interval& universe) const;

  [[nodiscard]] std::string str() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

/// J = [0,1).
const Interval& unit_segment();
/// I = [0,1], the path parameter domain.
const Interval& unit_interval();

// Operations on subsets of J.

/// The point set described by the endpoints and flags, intersected with J.
/// The point 1 is dropped silently. Throws if an endpoint lies outside [0,1].
IntervalSet make_interval(const Rational& lo, const Rational& hi, bool lo_closed, bool hi_closed);
IntervalSet iv_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet iv_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet iv_complement_in_J(const IntervalSet& a);
/// Throws if q lies outside J.
bool iv_contains(const IntervalSet& a, const Rational& q);
std::optional<Rational> iv_supremum(const IntervalSet& a);

}  // namespace fuzzytop
