#include "fuzzytop/interval_set.hpp"

#include <algorithm>

namespace fuzzytop {

bool Interval::contains(const Rational& q) const {
  const bool above = lo < q || (lo == q && lo_closed);
  const bool below = q < hi || (q == hi && hi_closed);
  return above && below;
}

std::string Interval::str() const {
  if (is_point()) return "{" + lo.str() + "}";
  return std::string(lo_closed ? "[" : "(") + lo.str() + "," + hi.str() + (hi_closed ? "]" : ")");
}

namespace {

Interval intersect_parts(const Interval& a, const Interval& b) {
  Interval r;
  if (a.lo > b.lo) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  return r;
}

// `next` starts at or after `cur` starts.
bool mergeable(const Interval& cur, const Interval& next) {
  if (next.lo < cur.hi) return true;
  return next.lo == cur.hi && (cur.hi_closed || next.lo_closed);
}

}  // namespace

IntervalSet IntervalSet::normalize(std::vector<Interval> raw) {
  std::erase_if(raw, [](const Interval& iv) { return iv.empty(); });
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  IntervalSet out;
  for (auto& iv : raw) {
    if (out.parts_.empty() || !mergeable(out.parts_.back(), iv)) {
      out.parts_.push_back(std::move(iv));
      continue;
    }
    Interval& cur = out.parts_.back();
    if (cur.lo == iv.lo) cur.lo_closed = cur.lo_closed || iv.lo_closed;
    if (iv.hi > cur.hi) {
      cur.hi = std::move(iv.hi);
      cur.hi_closed = iv.hi_closed;
    } else if (iv.hi == cur.hi) {
      cur.hi_closed = cur.hi_closed || iv.hi_closed;
    }
  }
  return out;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> raw(parts_.begin(), parts_.end());
  raw.insert(raw.end(), other.parts_.begin(), other.parts_.end());
  return normalize(std::move(raw));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> raw;
  for (const auto& a : parts_) {
    for (const auto& b : other.parts_) {
      Interval r = intersect_parts(a, b);
      if (!r.empty()) raw.push_back(std::move(r));
    }
  }
  return normalize(std::move(raw));
}

IntervalSet IntervalSet::complement_within(const Interval& universe) const {
  const IntervalSet inside = intersect(IntervalSet::of(universe));
  std::vector<Interval> gaps;
  Rational pos = universe.lo;
  bool pos_closed = universe.lo_closed;
  for (const auto& p : inside.parts_) {
    gaps.push_back(Interval{pos, p.lo, pos_closed, !p.lo_closed});
    pos = p.hi;
    pos_closed = !p.hi_closed;
  }
  gaps.push_back(Interval{pos, universe.hi, pos_closed, universe.hi_closed});
  return normalize(std::move(gaps));
}

bool IntervalSet::contains(const Rational& q) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& p) { return p.contains(q); });
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  return intersect(other) == *this;
}

std::optional<Rational> IntervalSet::supremum() const {
  if (parts_.empty()) return std::nullopt;
  return parts_.back().hi;
}

std::optional<Rational> IntervalSet::infimum() const {
  if (parts_.empty()) return std::nullopt;
  return parts_.front().lo;
}

std::optional<Rational> IntervalSet::sample_point() const {
  if (parts_.empty()) return std::nullopt;
  const Interval& p = parts_.front();
  if (p.lo_closed) return p.lo;
  if (p.hi_closed) return p.hi;
  return (p.lo + p.hi) / Rational(2);
}

bool IntervalSet::is_relatively_open(const Interval& universe) const {
  for (const auto& p : parts_) {
    if (p.lo_closed && !(p.lo == universe.lo && universe.lo_closed)) return false;
    if (p.hi_closed && !(p.hi == universe.hi && universe.hi_closed)) return false;
  }
  return true;
}

std::string IntervalSet::str() const {
  if (parts_.empty()) return "∅";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += " ∪ ";
    s += parts_[i].str();
  }
  return s;
}

const Interval& unit_segment() {
  static const Interval j{Rational(0), Rational(1), true, false};
  return j;
}

const Interval& unit_interval() {
  static const Interval i{Rational(0), Rational(1), true, true};
  return i;
}

IntervalSet make_interval(const Rational& lo, const Rational& hi, bool lo_closed, bool hi_closed) {
  const Rational zero(0), one(1);
  if (lo < zero || lo > one || hi < zero || hi > one) {
    throw DomainError("interval endpoint outside [0,1]: lo=" + lo.str() + " hi=" + hi.str());
  }
  return IntervalSet::of(Interval{lo, hi, lo_closed, hi_closed}).intersect(IntervalSet::of(unit_segment()));
}

IntervalSet iv_union(const IntervalSet& a, const IntervalSet& b) { return a.unite(b); }

IntervalSet iv_intersect(const IntervalSet& a, const IntervalSet& b) { return a.intersect(b); }

IntervalSet iv_complement_in_J(const IntervalSet& a) { return a.complement_within(unit_segment()); }

bool iv_contains(const IntervalSet& a, const Rational& q) {
  if (!unit_segment().contains(q)) throw DomainError("level outside J=[0,1): " + q.str());
  return a.contains(q);
}

std::optional<Rational> iv_supremum(const IntervalSet& a) { return a.supremum(); }

}  // namespace fuzzytop
