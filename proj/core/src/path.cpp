#include "fuzzytop/path.hpp"

#include <algorithm>

namespace fuzzytop {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);

void check_param(const Rational& u, const char* what) {
  if (u < kZero || u > kOne) throw DomainError(std::string(what) + " outside [0,1]: " + u.str());
}

CylPoint eval_concat(const std::vector<PathExpr>& parts, std::size_t n, const Rational& u) {
  if (n == 1) return eval_path(parts[0], u);
  if (u <= kHalf) return eval_concat(parts, n - 1, Rational(2) * u);
  return eval_path(parts[n - 1], Rational(2) * u - kOne);
}

// Drops every interior breakpoint across which the path is one affine piece.
PathNormalForm canonical(PathNormalForm f) {
  std::size_t j = 1;
  while (j + 1 < f.breaks.size()) {
    const AffinePiece& left = f.gaps[j - 1];
    const bool seamless = left == f.gaps[j] && f.values[j] == CylPoint{left.x, left.level(f.breaks[j])};
    if (seamless) {
      f.breaks.erase(f.breaks.begin() + static_cast<std::ptrdiff_t>(j));
      f.values.erase(f.values.begin() + static_cast<std::ptrdiff_t>(j));
      f.gaps.erase(f.gaps.begin() + static_cast<std::ptrdiff_t>(j));
    } else {
      ++j;
    }
  }
  return f;
}

// Reparametrize f onto [lo, hi]: the result at lo + (hi - lo) v is f(v).
PathNormalForm place(const PathNormalForm& f, const Rational& lo, const Rational& hi) {
  const Rational w = hi - lo;
  PathNormalForm g;
  for (const auto& b : f.breaks) g.breaks.push_back(lo + w * b);
  g.values = f.values;
  for (const auto& p : f.gaps) g.gaps.push_back({p.x, p.c0 - p.c1 * lo / w, p.c1 / w});
  return g;
}

PathNormalForm join_halves(const PathNormalForm& a, const PathNormalForm& b) {
  PathNormalForm l = place(a, kZero, kHalf);
  const PathNormalForm r = place(b, kHalf, kOne);
  l.breaks.insert(l.breaks.end(), r.breaks.begin() + 1, r.breaks.end());
  l.values.insert(l.values.end(), r.values.begin() + 1, r.values.end());
  l.gaps.insert(l.gaps.end(), r.gaps.begin(), r.gaps.end());
  return l;
}

PathNormalForm single_piece(const CylPoint& from, const CylPoint& to, const AffinePiece& piece) {
  return PathNormalForm{{kZero, kOne}, {from, to}, {piece}};
}

PathNormalForm raw_form(const PathExpr& e);

struct FormVisitor {
  PathNormalForm operator()(const PathExpr::Const& c) const {
    return single_piece(c.p, c.p, {c.p.x, c.p.alpha, kZero});
  }
  PathNormalForm operator()(const PathExpr::Vertical& v) const {
    return single_piece({v.x, v.a0}, {v.x, v.a1}, {v.x, v.a0, v.a1 - v.a0});
  }
  PathNormalForm operator()(const PathExpr::HLift& h) const {
    PathNormalForm f;
    const auto k = static_cast<long>(h.base.segments());
    if (k == 0) return single_piece({h.base.steps()[0], h.level}, {h.base.steps()[0], h.level},
                                    {h.base.steps()[0], h.level, kZero});
    for (long i = 0; i <= k; ++i) {
      f.breaks.emplace_back(i, k);
      f.values.push_back({h.base.steps()[static_cast<std::size_t>(i)], h.level});
    }
    for (const auto& x : h.base.interiors()) f.gaps.push_back({x, h.level, kZero});
    return f;
  }
  PathNormalForm operator()(const PathExpr::Concat& c) const {
    PathNormalForm acc = raw_form(c.parts[0]);
    for (std::size_t i = 1; i < c.parts.size(); ++i) acc = join_halves(acc, raw_form(c.parts[i]));
    return acc;
  }
  PathNormalForm operator()(const PathExpr::Reverse& r) const {
    const PathNormalForm f = raw_form(r.inner);
    PathNormalForm g;
    for (auto it = f.breaks.rbegin(); it != f.breaks.rend(); ++it) g.breaks.push_back(kOne - *it);
    g.values.assign(f.values.rbegin(), f.values.rend());
    for (auto it = f.gaps.rbegin(); it != f.gaps.rend(); ++it) g.gaps.push_back({it->x, it->c0 + it->c1, -it->c1});
    return g;
  }
  PathNormalForm operator()(const PathExpr::HTransform& h) const {
    PathNormalForm f = raw_form(h.inner);
    const Rational k = kOne - h.t;
    for (auto& v : f.values) v.alpha *= k;
    for (auto& p : f.gaps) {
      p.c0 *= k;
      p.c1 *= k;
    }
    return f;
  }
  PathNormalForm operator()(const PathExpr::ChiBoundary& c) const {
    const CylPoint q = raw_form(c.rho).eval(Rational(c.end));
    const CylPoint from{q.x, (kOne - c.s) * q.alpha};
    const CylPoint to{q.x, (kOne - c.t) * q.alpha};
    return single_piece(from, to, {q.x, from.alpha, -(c.t - c.s) * q.alpha});
  }
};

PathNormalForm raw_form(const PathExpr& e) { return std::visit(FormVisitor{}, e.node().v); }

// Levels swept by one gap: the open segment between its end levels, or a point.
IntervalSet gap_levels(const AffinePiece& p, const Rational& lo, const Rational& hi) {
  const Rational a = p.level(lo);
  const Rational b = p.level(hi);
  if (a == b) return make_interval(a, a, true, true);
  return make_interval(min(a, b), max(a, b), false, false);
}

}  // namespace

FencePath FencePath::make(std::vector<std::string> steps, const FiniteTopology& base) {
  if (steps.empty()) throw DomainError("fence path needs at least one point");
  const GroundSet& g = *base.ground();
  const SpecializationPreorder pre(base);
  FencePath f;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    const std::size_t a = g.index(steps[i]);
    const std::size_t b = g.index(steps[i + 1]);
    if (!pre.comparable(a, b)) {
      throw DomainError("fence steps " + steps[i] + " and " + steps[i + 1] + " are not comparable");
    }
    // The open segment sits at the endpoint lying in the other's minimal open.
    f.interiors_.push_back(pre.leq(a, b) ? steps[i + 1] : steps[i]);
  }
  if (steps.size() == 1) (void)g.index(steps[0]);
  f.steps_ = std::move(steps);
  return f;
}

std::string FencePath::at(const Rational& u) const {
  check_param(u, "fence parameter");
  const auto k = static_cast<long>(segments());
  for (long i = 0; i < k; ++i) {
    const Rational b(i, k);
    if (u == b) return steps_[static_cast<std::size_t>(i)];
    if (u < Rational(i + 1, k)) return interiors_[static_cast<std::size_t>(i)];
  }
  return steps_.back();
}

PathExpr PathExpr::constant(CylPoint p) {
  check_level(p.alpha);
  return PathExpr(std::make_shared<const Node>(Node{Const{std::move(p)}}));
}

PathExpr PathExpr::vertical(std::string x, Rational a0, Rational a1) {
  check_level(a0);
  check_level(a1);
  return PathExpr(std::make_shared<const Node>(Node{Vertical{std::move(x), std::move(a0), std::move(a1)}}));
}

PathExpr PathExpr::hlift(FencePath base, Rational level) {
  check_level(level);
  return PathExpr(std::make_shared<const Node>(Node{HLift{std::move(base), std::move(level)}}));
}

PathExpr PathExpr::concat(std::vector<PathExpr> parts) {
  if (parts.empty()) throw DomainError("concatenation of no paths");
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    const CylPoint end = parts[i].finish();
    const CylPoint next = parts[i + 1].start();
    if (!(end == next)) {
      throw DomainError("paths do not meet: " + to_string(end) + " then " + to_string(next));
    }
  }
  return PathExpr(std::make_shared<const Node>(Node{Concat{std::move(parts)}}));
}

PathExpr PathExpr::reverse(PathExpr inner) {
  return PathExpr(std::make_shared<const Node>(Node{Reverse{std::move(inner)}}));
}

PathExpr PathExpr::htransform(Rational t, PathExpr inner) {
  check_param(t, "homotopy time");
  return PathExpr(std::make_shared<const Node>(Node{HTransform{std::move(t), std::move(inner)}}));
}

PathExpr PathExpr::chi_boundary(PathExpr rho, Rational s, Rational t, int end) {
  check_param(s, "s");
  check_param(t, "t");
  if (end != 0 && end != 1) throw DomainError("boundary end must be 0 or 1");
  return PathExpr(std::make_shared<const Node>(Node{ChiBoundary{std::move(rho), std::move(s), std::move(t), end}}));
}

CylPoint PathExpr::start() const { return eval_path(*this, kZero); }
CylPoint PathExpr::finish() const { return eval_path(*this, kOne); }

Rational kappa(const Rational& s, const Rational& t, const Rational& x) {
  check_param(s, "s");
  check_param(t, "t");
  check_param(x, "x");
  return (t - s) * x + s;
}

CylPoint eval_path(const PathExpr& e, const Rational& u) {
  check_param(u, "path parameter");
  const auto& v = e.node().v;
  if (const auto* c = std::get_if<PathExpr::Const>(&v)) return c->p;
  if (const auto* w = std::get_if<PathExpr::Vertical>(&v)) return {w->x, w->a0 + (w->a1 - w->a0) * u};
  if (const auto* h = std::get_if<PathExpr::HLift>(&v)) return {h->base.at(u), h->level};
  if (const auto* c = std::get_if<PathExpr::Concat>(&v)) return eval_concat(c->parts, c->parts.size(), u);
  if (const auto* r = std::get_if<PathExpr::Reverse>(&v)) return eval_path(r->inner, kOne - u);
  if (const auto* h = std::get_if<PathExpr::HTransform>(&v)) return h_eval(h->t, eval_path(h->inner, u));
  const auto& c = std::get<PathExpr::ChiBoundary>(v);
  return h_eval(kappa(c.s, c.t, u), eval_path(c.rho, Rational(c.end)));
}

PathNormalForm normal_form(const PathExpr& e) { return canonical(raw_form(e)); }

CylPoint PathNormalForm::eval(const Rational& u) const {
  check_param(u, "path parameter");
  const auto it = std::lower_bound(breaks.begin(), breaks.end(), u);
  const auto j = static_cast<std::size_t>(it - breaks.begin());
  if (it != breaks.end() && *it == u) return values[j];
  const AffinePiece& p = gaps[j - 1];
  return {p.x, p.level(u)};
}

PathNormalForm PathNormalForm::restrict(const Rational& a, const Rational& b) const {
  check_param(a, "restriction start");
  check_param(b, "restriction end");
  if (!(a < b)) throw DomainError("restriction needs a < b");
  const Rational w = b - a;
  PathNormalForm g;
  g.breaks.push_back(kZero);
  g.values.push_back(eval(a));
  for (std::size_t j = 0; j < breaks.size(); ++j) {
    if (breaks[j] > a && breaks[j] < b) {
      g.breaks.push_back((breaks[j] - a) / w);
      g.values.push_back(values[j]);
    }
  }
  g.breaks.push_back(kOne);
  g.values.push_back(eval(b));
  for (std::size_t j = 0; j + 1 < g.breaks.size(); ++j) {
    const Rational mid = a + w * (g.breaks[j] + g.breaks[j + 1]) / Rational(2);
    const auto it = std::upper_bound(breaks.begin(), breaks.end(), mid);
    const AffinePiece& p = gaps[static_cast<std::size_t>(it - breaks.begin()) - 1];
    g.gaps.push_back({p.x, p.c0 + p.c1 * a, p.c1 * w});
  }
  return canonical(std::move(g));
}

CylPoint chi_eval(const PathExpr& rho, const Rational& s, const Rational& t, const Rational& eta,
                  const Rational& x) {
  return h_eval(kappa(s, t, x), eval_path(rho, eta));
}

CylPoint chi_eval(const PathNormalForm& rho, const Rational& s, const Rational& t, const Rational& eta,
                  const Rational& x) {
  return h_eval(kappa(s, t, x), rho.eval(eta));
}

PathExpr chi_boundary(const PathExpr& rho, const Rational& s, const Rational& t, int end) {
  check_param(s, "s");
  check_param(t, "t");
  if (end != 0 && end != 1) throw DomainError("boundary end must be 0 or 1");
  const CylPoint q = eval_path(rho, Rational(end));
  return PathExpr::vertical(q.x, (kOne - s) * q.alpha, (kOne - t) * q.alpha);
}

ContainmentResult path_in_open(const PathExpr& e, const CylinderOpen& open) {
  const PathNormalForm f = normal_form(e);
  for (const auto& v : f.values) {
    if (!open.fiber(v.x).contains(v.alpha)) return {false, v};
  }
  for (std::size_t j = 0; j < f.gaps.size(); ++j) {
    const AffinePiece& p = f.gaps[j];
    const IntervalSet levels = gap_levels(p, f.breaks[j], f.breaks[j + 1]);
    const IntervalSet missing = levels.intersect(open.fiber(p.x).complement_within(unit_segment()));
    if (const auto lvl = missing.sample_point()) return {false, CylPoint{p.x, *lvl}};
  }
  return {true, std::nullopt};
}

IntervalSet path_preimage(const PathExpr& e, const CylinderOpen& target) {
  return path_preimage(normal_form(e), target);
}

IntervalSet path_preimage(const PathNormalForm& f, const CylinderOpen& target) {
  std::vector<Interval> out;
  for (std::size_t j = 0; j < f.breaks.size(); ++j) {
    if (target.fiber(f.values[j].x).contains(f.values[j].alpha)) {
      out.push_back({f.breaks[j], f.breaks[j], true, true});
    }
  }
  for (std::size_t j = 0; j < f.gaps.size(); ++j) {
    const AffinePiece& p = f.gaps[j];
    const Interval gap{f.breaks[j], f.breaks[j + 1], false, false};
    const IntervalSet& fib = target.fiber(p.x);
    if (p.c1.is_zero()) {
      if (fib.contains(p.c0)) out.push_back(gap);
      continue;
    }
    std::vector<Interval> pulled;
    for (const auto& part : fib.parts()) {
      const Rational a = (part.lo - p.c0) / p.c1;
      const Rational b = (part.hi - p.c0) / p.c1;
      if (p.c1 > kZero) {
        pulled.push_back({a, b, part.lo_closed, part.hi_closed});
      } else {
        pulled.push_back({b, a, part.hi_closed, part.lo_closed});
      }
    }
    const IntervalSet hit = IntervalSet::normalize(std::move(pulled)).intersect(IntervalSet::of(gap));
    for (const auto& part : hit.parts()) out.push_back(part);
  }
  return IntervalSet::normalize(std::move(out));
}

bool path_preimage_open(const PathExpr& e, const SubbasisElem& target, const FuzzyTopology& topo) {
  return path_preimage_open(normal_form(e), target, topo);
}

bool path_preimage_open(const PathNormalForm& f, const SubbasisElem& target, const FuzzyTopology& topo) {
  return path_preimage(f, subbasis_realize(target, topo)).is_relatively_open(unit_interval());
}

PathExpr functor_object_path(const FuzzySet& f, const std::string& y, const std::string& z, const Rational& beta) {
  check_level(beta);
  if (!f.ground()->has(z)) throw DomainError("unknown element " + z);
  const Rational& fy = f.at(y);
  return PathExpr::vertical(z, (kOne - fy) * beta, fy * beta);
}

std::optional<PathExpr> connecting_path(const FuzzyTopology& topo, const CylPoint& from, const CylPoint& to) {
  check_level(from.alpha);
  check_level(to.alpha);
  const FiniteTopology base = iota_x(topo);
  const GroundSet& g = *topo.ground();
  const auto chain = SpecializationPreorder(base).fence(g.index(from.x), g.index(to.x));
  if (!chain) return std::nullopt;
  std::vector<std::string> steps;
  for (std::size_t i : *chain) steps.push_back(g.name(i));
  return PathExpr::concat({PathExpr::vertical(from.x, from.alpha, kZero),
                           PathExpr::hlift(FencePath::make(std::move(steps), base), kZero),
                           PathExpr::vertical(to.x, kZero, to.alpha)});
}

}  // namespace fuzzytop
