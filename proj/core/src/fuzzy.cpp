#include "fuzzytop/fuzzy.hpp"

#include <algorithm>

namespace fuzzytop {

GroundSet::GroundSet(std::vector<std::string> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw DomainError("ground set must be nonempty");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      throw DomainError("duplicate ground element '" + elements_[i] + "'");
    }
  }
}

std::size_t GroundSet::index(const std::string& element) const {
  const auto it = index_.find(element);
  if (it == index_.end()) throw DomainError("unknown ground element '" + element + "'");
  return it->second;
}

GroundRef make_ground(std::vector<std::string> elements) {
  return std::make_shared<const GroundSet>(std::move(elements));
}

void require_same_ground(const GroundRef& a, const GroundRef& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw DomainError("ground-set mismatch");
}

FuzzySet::FuzzySet(GroundRef ground, std::vector<Rational> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
  if (!ground_) throw DomainError("fuzzy set without ground set");
  if (values_.size() != ground_->size()) throw DomainError("fuzzy set must assign a value to every element");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < Rational(0) || values_[i] > Rational(1)) {
      throw DomainError("membership of '" + ground_->name(i) + "' outside [0,1]: " + values_[i].str());
    }
  }
}

FuzzySet FuzzySet::constant(GroundRef ground, const Rational& value) {
  const std::size_t n = ground ? ground->size() : 0;
  return FuzzySet(std::move(ground), std::vector<Rational>(n, value));
}

std::vector<std::size_t> FuzzySet::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!values_[i].is_zero()) out.push_back(i);
  }
  return out;
}

bool FuzzySet::leq(const FuzzySet& other) const {
  require_same_ground(ground_, other.ground_);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > other.values_[i]) return false;
  }
  return true;
}

std::string FuzzySet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ",";
    s += ground_->name(i) + ":" + values_[i].str();
  }
  return s + "}";
}

const char* to_string(ValidationReport::Failure f) {
  switch (f) {
    case ValidationReport::Failure::none: return "none";
    case ValidationReport::Failure::missing_empty: return "missing_empty";
    case ValidationReport::Failure::missing_whole: return "missing_whole";
    case ValidationReport::Failure::meet_absent: return "meet_absent";
    case ValidationReport::Failure::join_absent: return "join_absent";
    case ValidationReport::Failure::duplicate_name: return "duplicate_name";
  }
  return "unknown";
}

FuzzyTopology::FuzzyTopology(GroundRef ground, std::vector<NamedOpen> opens)
    : ground_(std::move(ground)), opens_(std::move(opens)) {
  const ValidationReport report = fz_is_topology(ground_, opens_);
  if (!report.ok) throw DomainError("not a fuzzy topology: " + report.message);
}

const FuzzySet& FuzzyTopology::open(const std::string& name) const {
  for (const auto& o : opens_) {
    if (o.name == name) return o.set;
  }
  throw DomainError("unknown open '" + name + "'");
}

bool FuzzyTopology::has_open(const std::string& name) const {
  return std::any_of(opens_.begin(), opens_.end(), [&](const NamedOpen& o) { return o.name == name; });
}

bool FuzzyTopology::contains_set(const FuzzySet& f) const { return name_of(f).has_value(); }

std::optional<std::string> FuzzyTopology::name_of(const FuzzySet& f) const {
  for (const auto& o : opens_) {
    if (o.set == f) return o.name;
  }
  return std::nullopt;
}

FuzzySet fz_meet(const FuzzySet& a, const FuzzySet& b) {
  require_same_ground(a.ground(), b.ground());
  std::vector<Rational> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = min(a.at(i), b.at(i));
  return FuzzySet(a.ground(), std::move(v));
}

FuzzySet fz_join(const std::vector<FuzzySet>& family) {
  if (family.empty()) throw DomainError("join of an empty family");
  std::vector<Rational> v = family.front().values();
  for (std::size_t k = 1; k < family.size(); ++k) {
    require_same_ground(family.front().ground(), family[k].ground());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = max(v[i], family[k].at(i));
  }
  return FuzzySet(family.front().ground(), std::move(v));
}

FuzzySet fz_complement(const FuzzySet& f) {
  std::vector<Rational> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(1) - f.at(i);
  return FuzzySet(f.ground(), std::move(v));
}

FuzzySet fz_indicator(const std::set<std::string>& subset, const GroundRef& ground) {
  std::vector<Rational> v(ground->size(), Rational(0));
  for (const auto& e : subset) v[ground->index(e)] = Rational(1);
  return FuzzySet(ground, std::move(v));
}

ValidationReport fz_is_topology(const GroundRef& ground, const std::vector<NamedOpen>& family) {
  ValidationReport r;
  std::set<std::string> names;
  std::set<std::vector<Rational>> present;
  for (const auto& o : family) {
    require_same_ground(ground, o.set.ground());
    if (!names.insert(o.name).second) {
      r.ok = false;
      r.failure = ValidationReport::Failure::duplicate_name;
      r.message = "duplicate open name '" + o.name + "'";
      r.left = o.name;
      return r;
    }
    present.insert(o.set.values());
  }
  const FuzzySet zero = FuzzySet::constant(ground, Rational(0));
  const FuzzySet one = FuzzySet::constant(ground, Rational(1));
  if (!present.count(zero.values())) {
    r.ok = false;
    r.failure = ValidationReport::Failure::missing_empty;
    r.message = "constant-0 map is missing";
    r.absent = zero;
    return r;
  }
  if (!present.count(one.values())) {
    r.ok = false;
    r.failure = ValidationReport::Failure::missing_whole;
    r.message = "constant-1 map is missing";
    r.absent = one;
    return r;
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const FuzzySet m = fz_meet(family[i].set, family[j].set);
      if (!present.count(m.values())) {
        r.ok = false;
        r.failure = ValidationReport::Failure::meet_absent;
        r.message = "meet of '" + family[i].name + "' and '" + family[j].name + "' is absent";
        r.left = family[i].name;
        r.right = family[j].name;
        r.absent = m;
        return r;
      }
      const FuzzySet u = fz_join({family[i].set, family[j].set});
      if (!present.count(u.values())) {
        r.ok = false;
        r.failure = ValidationReport::Failure::join_absent;
        r.message = "join of '" + family[i].name + "' and '" + family[j].name + "' is absent";
        r.left = family[i].name;
        r.right = family[j].name;
        r.absent = u;
        return r;
      }
    }
  }
  return r;
}

FuzzyTopology fz_generate_topology(const GroundRef& ground, const std::vector<NamedOpen>& generators) {
  std::vector<NamedOpen> opens;
  std::map<std::vector<Rational>, std::size_t> seen;
  std::set<std::string> names;

  auto unique_name = [&](std::string base) {
    std::string name = base;
    for (int k = 2; names.count(name); ++k) name = base + "_" + std::to_string(k);
    names.insert(name);
    return name;
  };
  auto add = [&](const FuzzySet& f, const std::string& base) {
    require_same_ground(ground, f.ground());
    if (seen.count(f.values())) return false;
    seen.emplace(f.values(), opens.size());
    opens.push_back({unique_name(base), f});
    return true;
  };

  for (const auto& g : generators) add(g.set, g.name);
  add(FuzzySet::constant(ground, Rational(0)), "empty");
  add(FuzzySet::constant(ground, Rational(1)), "X");

  // Values stay inside the finite grid of generator values, so this terminates.
  int fresh = 0;
  for (std::size_t done = 0; done < opens.size(); ++done) {
    for (std::size_t j = 0; j <= done; ++j) {
      const FuzzySet m = fz_meet(opens[done].set, opens[j].set);
      const FuzzySet u = fz_join({opens[done].set, opens[j].set});
      if (!seen.count(m.values())) add(m, "U" + std::to_string(++fresh));
      if (!seen.count(u.values())) add(u, "U" + std::to_string(++fresh));
    }
  }
  return FuzzyTopology(ground, std::move(opens));
}

FuzzyTopology fz_generate_topology(const GroundRef& ground, const std::vector<FuzzySet>& generators) {
  std::vector<NamedOpen> named;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    named.push_back({"G" + std::to_string(i + 1), generators[i]});
  }
  return fz_generate_topology(ground, named);
}

}  // namespace fuzzytop
