#include "fuzzytop/retraction.hpp"

namespace fuzzytop {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);

void check_time(const Rational& t) {
  if (t < kZero || t > kOne) throw DomainError("homotopy time outside [0,1]: " + t.str());
}

// {a*f : a in A, f in B} for nonempty intervals of nonnegative numbers.
Interval product(const Interval& a, const Interval& b) {
  Interval r;
  r.lo = a.lo * b.lo;
  r.hi = a.hi * b.hi;
  if (r.lo.is_zero()) {
    r.lo_closed = a.contains(kZero) || b.contains(kZero);
  } else {
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  r.hi_closed = r.hi.is_zero() || (a.hi_closed && b.hi_closed);
  return r;
}

}  // namespace

std::string to_string(const CylPoint& p) { return "(" + p.x + "," + p.alpha.str() + ")"; }

void check_level(const Rational& alpha) {
  if (!unit_segment().contains(alpha)) throw DomainError("level outside J=[0,1): " + alpha.str());
}

CylPoint h_eval(const Rational& t, const CylPoint& p) {
  check_time(t);
  check_level(p.alpha);
  return {p.x, (kOne - t) * p.alpha};
}

CylPoint sigma_eval(const CylPoint& p) {
  check_level(p.alpha);
  return {p.x, kZero};
}

CylinderOpen h_image_of_box(const Interval& t_interval, const CylinderOpen& region) {
  if (t_interval.lo < kZero || t_interval.hi > kOne) throw DomainError("time interval outside [0,1]");
  if (t_interval.empty()) return CylinderOpen::empty(region.ground());
  // The factor 1-t ranges over the mirrored interval with flags swapped.
  const Interval factor{kOne - t_interval.hi, kOne - t_interval.lo, t_interval.hi_closed, t_interval.lo_closed};
  std::vector<IntervalSet> fibers;
  fibers.reserve(region.fibers().size());
  for (const auto& fib : region.fibers()) {
    std::vector<Interval> parts;
    for (const auto& p : fib.parts()) parts.push_back(product(p, factor));
    fibers.push_back(IntervalSet::normalize(std::move(parts)));
  }
  return CylinderOpen(region.ground(), std::move(fibers));
}

WitnessCase witness_case(const Rational& t) {
  check_time(t);
  if (t.is_zero()) return WitnessCase::t_zero;
  if (t == kOne) return WitnessCase::t_one;
  return WitnessCase::t_interior;
}

const char* to_string(WitnessCase c) {
  switch (c) {
    case WitnessCase::t_zero: return "t=0";
    case WitnessCase::t_interior: return "0<t<1";
    case WitnessCase::t_one: return "t=1";
  }
  return "?";
}

BoxWitness continuity_witness(const Rational& t, const CylPoint& p, const SubbasisElem& target,
                              const FuzzyTopology& topo) {
  const CylPoint image = h_eval(t, p);
  const CylinderOpen target_set = subbasis_realize(target, topo);
  if (!cyl_contains(target_set, image.x, image.alpha)) {
    throw DomainError("H" + std::string("(") + t.str() + "," + to_string(p) + ") is not in " + to_string(target));
  }

  const Rational& a = p.alpha;
  const Rational& gamma = gamma_of(target);
  const Rational minus_one(-1);
  const auto* tstar = std::get_if<TStar>(&target);
  const Rational tx = tstar ? topo.open(tstar->open_name).at(p.x) : kZero;

  Rational eps;
  Interval t_interval;
  std::vector<SubbasisElem> clause;

  switch (witness_case(t)) {
    case WitnessCase::t_one: {
      if (a.is_zero()) {
        eps = kHalf;
        clause = {target};
      } else if (!tstar) {
        eps = min(kOne, a) / Rational(2);
        clause = {Pi2{a - eps}};
      } else {
        eps = min(min((tx - gamma) / Rational(2), a), kOne) / Rational(2);
        clause = {TStar{tstar->open_name, max(minus_one, gamma - (a - Rational(2) * eps))}, Pi2{a - eps}};
      }
      t_interval = Interval{kOne - eps, kOne, false, true};
      break;
    }
    case WitnessCase::t_interior: {
      Rational slack = min(t, kOne - t);
      if (!tstar) {
        if (!a.is_zero()) slack = min(slack, ((kOne - t) * a - gamma) / a);
        eps = slack / Rational(2);
        clause = {Pi2{gamma + (t + eps) * a}};
      } else {
        slack = min(slack, (tx - (kOne - t) * a - gamma) / (kOne + t));
        eps = slack / Rational(2);
        const Rational mu = max(minus_one, gamma - a * t + eps * t + eps);
        clause = {TStar{tstar->open_name, mu}, Pi2{a - eps}};
      }
      t_interval = Interval{t - eps, t + eps, false, false};
      break;
    }
    case WitnessCase::t_zero: {
      if (!tstar && !a.is_zero()) {
        eps = min(kOne, kOne - gamma / a) / Rational(2);
        clause = {Pi2{max(minus_one, gamma / (kOne - eps))}};
      } else {
        eps = kHalf;
        clause = {target};
      }
      t_interval = Interval{kZero, eps, true, false};
      break;
    }
  }

  OpenExpr expr{{std::move(clause)}};
  CylinderOpen region = open_realize(expr, topo);
  return BoxWitness{t_interval, std::move(expr), std::move(region), target, t, p};
}

WitnessCheck check_witness(const BoxWitness& w, const FuzzyTopology& topo) {
  WitnessCheck c;
  const bool t_in_range = w.t_interval.lo >= kZero && w.t_interval.hi <= kOne && !w.t_interval.empty();
  if (!t_in_range) return c;
  try {
    c.anchor_inside = w.t_interval.contains(w.anchor_t) && unit_segment().contains(w.anchor_point.alpha) &&
                      w.region.fiber(w.anchor_point.x).contains(w.anchor_point.alpha);
    c.region_realizes = open_realize(w.region_expr, topo) == w.region;
    c.image_inside = h_image_of_box(w.t_interval, w.region).subset_of(subbasis_realize(w.target, topo));
  } catch (const DomainError&) {
    return c;
  }
  c.ok = c.anchor_inside && c.region_realizes && c.image_inside;
  return c;
}

CylinderOpen sigma_image(const CylinderOpen& c) {
  const IntervalSet origin = make_interval(kZero, kZero, true, true);
  std::vector<IntervalSet> fibers;
  fibers.reserve(c.fibers().size());
  for (const auto& f : c.fibers()) fibers.push_back(f.empty() ? IntervalSet{} : origin);
  return CylinderOpen(c.ground(), std::move(fibers));
}

CylinderOpen slice_part(const CylinderOpen& c) {
  return c.intersect(CylinderOpen::uniform(c.ground(), make_interval(kZero, kZero, true, true)));
}

CylinderOpen sigma_image_subbasis(const SubbasisElem& e, const FuzzyTopology& topo) {
  return sigma_image(subbasis_realize(e, topo));
}

}  // namespace fuzzytop
