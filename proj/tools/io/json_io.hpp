#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fuzzytop/base_space.hpp"
#include "fuzzytop/complement.hpp"
#include "fuzzytop/path.hpp"
#include "fuzzytop/sweeps.hpp"
#include "json.hpp"

namespace fuzzytop::io {

using nlohmann::json;

/// Raised for input documents that do not have the expected shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const Rational& q);
Rational rational_from(const json& j);

json to_json(const Interval& iv);
Interval interval_from(const json& j);
json to_json(const IntervalSet& s);
IntervalSet interval_set_from(const json& j);

json to_json(const CylinderOpen& c);
CylinderOpen cylinder_from(const json& j, const GroundRef& ground);

json to_json(const FuzzySet& f);
FuzzySet fuzzy_from(const json& j, const GroundRef& ground);

/// {"ground_set": [...], "opens": [{"name": ..., "values": {...}}], "generate": false}
struct FamilyDoc {
  GroundRef ground;
  std::vector<NamedOpen> opens;
  bool generate = false;
};
FamilyDoc family_from(const json& j);
json to_json(const FuzzyTopology& t);
/// Builds the topology, closing the family first when "generate" is set.
FuzzyTopology topology_from(const json& j);

json to_json(const SubbasisElem& e);
SubbasisElem subbasis_from(const json& j);
json to_json(const OpenExpr& e);
OpenExpr open_expr_from(const json& j);

json to_json(const CylPoint& p);
CylPoint point_from(const json& j);

json to_json(const PathExpr& e);
/// Fence paths are checked against the base topology.
PathExpr path_from(const json& j, const FiniteTopology& base);

json to_json(const BoxWitness& w);
BoxWitness witness_from(const json& j, const FuzzyTopology& topo);

json to_json(const FiniteTopology& ft);
json to_json(const SweepResult& r);
json to_json(const ComplementReport& r);

json read_json_file(const std::string& path);

}  // namespace fuzzytop::io
