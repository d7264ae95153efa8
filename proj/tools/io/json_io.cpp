#include "json_io.hpp"

#include <fstream>

namespace fuzzytop::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string text(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

bool flag(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_boolean()) throw ParseError(std::string("\"") + key + "\" must be a boolean");
  return v.get<bool>();
}

const json& array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

GroundRef ground_from(const json& j) {
  std::vector<std::string> names;
  for (const auto& e : array(j, "ground_set")) names.push_back(text(e, "ground element"));
  try {
    return make_ground(std::move(names));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

json to_json(const Rational& q) { return q.str(); }

Rational rational_from(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  try {
    return Rational::parse(text(j, "rational"));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const Interval& iv) {
  return {{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}, {"lo_open", !iv.lo_closed}, {"hi_open", !iv.hi_closed}};
}

Interval interval_from(const json& j) {
  return {rational_from(field(j, "lo")), rational_from(field(j, "hi")), !flag(j, "lo_open"), !flag(j, "hi_open")};
}

json to_json(const IntervalSet& s) {
  json out = json::array();
  for (const auto& p : s.parts()) out.push_back(to_json(p));
  return out;
}

IntervalSet interval_set_from(const json& j) {
  std::vector<Interval> parts;
  for (const auto& p : array(j, "interval set")) parts.push_back(interval_from(p));
  return IntervalSet::normalize(std::move(parts));
}

json to_json(const CylinderOpen& c) {
  json fibers = json::object();
  for (std::size_t i = 0; i < c.fibers().size(); ++i) fibers[c.ground()->name(i)] = to_json(c.fiber(i));
  return {{"text", c.str()}, {"fibers", fibers}};
}

CylinderOpen cylinder_from(const json& j, const GroundRef& ground) {
  const json& fibers = field(j, "fibers");
  if (!fibers.is_object()) throw ParseError("\"fibers\" must be an object");
  std::vector<IntervalSet> out(ground->size());
  for (const auto& [name, value] : fibers.items()) {
    if (!ground->has(name)) throw ParseError("fiber for unknown element " + name);
    out[ground->index(name)] = interval_set_from(value);
  }
  return CylinderOpen(ground, std::move(out));
}

json to_json(const FuzzySet& f) {
  json out = json::object();
  for (std::size_t i = 0; i < f.size(); ++i) out[f.ground()->name(i)] = to_json(f.at(i));
  return out;
}

FuzzySet fuzzy_from(const json& j, const GroundRef& ground) {
  if (!j.is_object()) throw ParseError("fuzzy set values must be an object");
  std::vector<Rational> values;
  for (const auto& name : ground->elements()) {
    const auto it = j.find(name);
    if (it == j.end()) throw ParseError("no membership value for " + name);
    values.push_back(rational_from(*it));
  }
  for (const auto& [name, value] : j.items()) {
    if (!ground->has(name)) throw ParseError("membership value for unknown element " + name);
  }
  try {
    return FuzzySet(ground, std::move(values));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

FamilyDoc family_from(const json& j) {
  FamilyDoc doc;
  doc.ground = ground_from(field(j, "ground_set"));
  for (const auto& o : array(field(j, "opens"), "opens")) {
    doc.opens.push_back({text(field(o, "name"), "open name"), fuzzy_from(field(o, "values"), doc.ground)});
  }
  if (j.contains("generate")) doc.generate = flag(j, "generate");
  return doc;
}

json to_json(const FuzzyTopology& t) {
  json opens = json::array();
  for (const auto& o : t.opens()) opens.push_back({{"name", o.name}, {"values", to_json(o.set)}});
  return {{"ground_set", t.ground()->elements()}, {"opens", opens}};
}

FuzzyTopology topology_from(const json& j) {
  FamilyDoc doc = family_from(j);
  try {
    if (doc.generate) return fz_generate_topology(doc.ground, doc.opens);
    return FuzzyTopology(doc.ground, std::move(doc.opens));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const SubbasisElem& e) {
  if (const auto* t = std::get_if<TStar>(&e)) return {{"tag", "tstar"}, {"open", t->open_name}, {"gamma", to_json(t->gamma)}};
  return {{"tag", "pi2"}, {"gamma", to_json(std::get<Pi2>(e).gamma)}};
}

SubbasisElem subbasis_from(const json& j) {
  const std::string tag = text(field(j, "tag"), "tag");
  const Rational gamma = rational_from(field(j, "gamma"));
  if (tag == "tstar") return TStar{text(field(j, "open"), "open name"), gamma};
  if (tag == "pi2") return Pi2{gamma};
  throw ParseError("unknown subbasis tag " + tag);
}

json to_json(const OpenExpr& e) {
  json clauses = json::array();
  for (const auto& c : e.clauses) {
    json clause = json::array();
    for (const auto& s : c) clause.push_back(to_json(s));
    clauses.push_back(clause);
  }
  return {{"clauses", clauses}};
}

OpenExpr open_expr_from(const json& j) {
  OpenExpr e;
  for (const auto& c : array(field(j, "clauses"), "clauses")) {
    std::vector<SubbasisElem> clause;
    for (const auto& s : array(c, "clause")) clause.push_back(subbasis_from(s));
    e.clauses.push_back(std::move(clause));
  }
  return e;
}

json to_json(const CylPoint& p) { return {{"x", p.x}, {"alpha", to_json(p.alpha)}}; }

CylPoint point_from(const json& j) { return {text(field(j, "x"), "element"), rational_from(field(j, "alpha"))}; }

json to_json(const PathExpr& e) {
  const auto& v = e.node().v;
  if (const auto* c = std::get_if<PathExpr::Const>(&v)) return {{"type", "const"}, {"point", to_json(c->p)}};
  if (const auto* w = std::get_if<PathExpr::Vertical>(&v)) {
    return {{"type", "vertical"}, {"x", w->x}, {"a0", to_json(w->a0)}, {"a1", to_json(w->a1)}};
  }
  if (const auto* h = std::get_if<PathExpr::HLift>(&v)) {
    return {{"type", "hlift"}, {"steps", h->base.steps()}, {"level", to_json(h->level)}};
  }
  if (const auto* c = std::get_if<PathExpr::Concat>(&v)) {
    json parts = json::array();
    for (const auto& p : c->parts) parts.push_back(to_json(p));
    return {{"type", "concat"}, {"parts", parts}};
  }
  if (const auto* r = std::get_if<PathExpr::Reverse>(&v)) return {{"type", "reverse"}, {"inner", to_json(r->inner)}};
  if (const auto* h = std::get_if<PathExpr::HTransform>(&v)) {
    return {{"type", "htransform"}, {"t", to_json(h->t)}, {"inner", to_json(h->inner)}};
  }
  const auto& c = std::get<PathExpr::ChiBoundary>(v);
  return {{"type", "chi_boundary"}, {"rho", to_json(c.rho)}, {"s", to_json(c.s)}, {"t", to_json(c.t)}, {"end", c.end}};
}

PathExpr path_from(const json& j, const FiniteTopology& base) {
  const std::string type = text(field(j, "type"), "path type");
  try {
    if (type == "const") return PathExpr::constant(point_from(field(j, "point")));
    if (type == "vertical") {
      return PathExpr::vertical(text(field(j, "x"), "element"), rational_from(field(j, "a0")),
                                rational_from(field(j, "a1")));
    }
    if (type == "hlift") {
      std::vector<std::string> steps;
      for (const auto& s : array(field(j, "steps"), "steps")) steps.push_back(text(s, "fence step"));
      return PathExpr::hlift(FencePath::make(std::move(steps), base), rational_from(field(j, "level")));
    }
    if (type == "concat") {
      std::vector<PathExpr> parts;
      for (const auto& p : array(field(j, "parts"), "parts")) parts.push_back(path_from(p, base));
      return PathExpr::concat(std::move(parts));
    }
    if (type == "reverse") return PathExpr::reverse(path_from(field(j, "inner"), base));
    if (type == "htransform") return PathExpr::htransform(rational_from(field(j, "t")), path_from(field(j, "inner"), base));
    if (type == "chi_boundary") {
      const json& end = field(j, "end");
      if (!end.is_number_integer()) throw ParseError("\"end\" must be 0 or 1");
      return PathExpr::chi_boundary(path_from(field(j, "rho"), base), rational_from(field(j, "s")),
                                    rational_from(field(j, "t")), end.get<int>());
    }
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown path type " + type);
}

json to_json(const BoxWitness& w) {
  return {{"anchor", {{"t", to_json(w.anchor_t)}, {"point", to_json(w.anchor_point)}}},
          {"case", to_string(witness_case(w.anchor_t))},
          {"t_interval", to_json(w.t_interval)},
          {"region_expr", to_json(w.region_expr)},
          {"region", to_json(w.region)},
          {"target", to_json(w.target)}};
}

BoxWitness witness_from(const json& j, const FuzzyTopology& topo) {
  const json& anchor = field(j, "anchor");
  try {
    return BoxWitness{interval_from(field(j, "t_interval")),
                      open_expr_from(field(j, "region_expr")),
                      cylinder_from(field(j, "region"), topo.ground()),
                      subbasis_from(field(j, "target")),
                      rational_from(field(anchor, "t")),
                      point_from(field(anchor, "point"))};
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

json to_json(const FiniteTopology& ft) {
  json opens = json::array();
  for (ElementBits s : ft.opens()) opens.push_back(ft.names(s));
  return {{"ground_set", ft.ground()->elements()}, {"opens", opens}};
}

json to_json(const SweepResult& r) {
  return {{"name", r.name},
          {"ok", r.ok()},
          {"cases", r.cases},
          {"checks", r.checks},
          {"failures", r.failures},
          {"oracle_checks", r.oracle_checks},
          {"oracle_failures", r.oracle_failures},
          {"first_failure", r.first_failure},
          {"counters", r.counters}};
}

json to_json(const ComplementReport& r) {
  json out = {{"inversion", r.inversion},
              {"direct", r.direct},
              {"cylinder_compatible", r.cylinder_compatible},
              {"psi_of_complement", to_json(r.compat.psi_of_complement)},
              {"complement_of_psi", to_json(r.compat.complement_of_psi)}};
  out["mismatch"] = r.mismatch ? json(*r.mismatch) : json(nullptr);
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace fuzzytop::io
