#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fuzzytop/rational.hpp"

namespace fuzzytop {

/// Ordered, nonempty set of distinct element identifiers.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> elements);

  [[nodiscard]] std::size_t size() const { return elements_.size(); }
  [[nodiscard]] const std::vector<std::string>& elements() const { return elements_; }
  [[nodiscard]] const std::string& name(std::size_t i) const { return elements_.at(i); }
  /// Index of an element; throws DomainError for unknown identifiers.
  [[nodiscard]] std::size_t index(const std::string& element) const;
  [[nodiscard]] bool has(const std::string& element) const { return index_.count(element) != 0; }

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<std::string> elements_;
  std::map<std::string, std::size_t> index_;
};

using GroundRef = std::shared_ptr<const GroundSet>;

GroundRef make_ground(std::vector<std::string> elements);

/// Throws DomainError unless both refer to equal ground sets.
void require_same_ground(const GroundRef& a, const GroundRef& b);

/// A membership map X -> [0,1] with rational values.
class FuzzySet {
 public:
  FuzzySet(GroundRef ground, std::vector<Rational> values);
  static FuzzySet constant(GroundRef ground, const Rational& value);

  [[nodiscard]] const GroundRef& ground() const { return ground_; }
  [[nodiscard]] const std::vector<Rational>& values() const { return values_; }
  [[nodiscard]] const Rational& at(std::size_t i) const { return values_.at(i); }
  [[nodiscard]] const Rational& at(const std::string& element) const { return values_.at(ground_->index(element)); }
  [[nodiscard]] std::size_t size() const { return values_.size(); }
  /// Elements with nonzero membership.
  [[nodiscard]] std::vector<std::size_t> support() const;
  [[nodiscard]] bool leq(const FuzzySet& other) const;

  [[nodiscard]] std::string str() const;

  friend bool operator==(const FuzzySet& a, const FuzzySet& b) {
    return *a.ground_ == *b.ground_ && a.values_ == b.values_;
  }

 private:
  GroundRef ground_;
  std::vector<Rational> values_;
};

struct NamedOpen {
  std::string name;
  FuzzySet set;
};

/// Outcome of checking a family against the fuzzy-topology axioms.
struct ValidationReport {
  enum class Failure { none, missing_empty, missing_whole, meet_absent, join_absent, duplicate_name };

  bool ok = true;
  Failure failure = Failure::none;
  std::string message;
  // For meet/join failures, the offending pair and the absent result.
  std::optional<std::string> left;
  std::optional<std::string> right;
  std::optional<FuzzySet> absent;
};

const char* to_string(ValidationReport::Failure f);

/// Finite family of fuzzy sets satisfying the fuzzy-topology axioms.
class FuzzyTopology {
 public:
  /// Validates the family; throws DomainError carrying the report message on failure.
  FuzzyTopology(GroundRef ground, std::vector<NamedOpen> opens);

  [[nodiscard]] const GroundRef& ground() const { return ground_; }
  [[nodiscard]] const std::vector<NamedOpen>& opens() const { return opens_; }
  [[nodiscard]] std::size_t size() const { return opens_.size(); }
  /// Throws DomainError for unknown names.
  [[nodiscard]] const FuzzySet& open(const std::string& name) const;
  [[nodiscard]] bool has_open(const std::string& name) const;
  [[nodiscard]] bool contains_set(const FuzzySet& f) const;
  /// Name of an open equal to `f`, if any.
  [[nodiscard]] std::optional<std::string> name_of(const FuzzySet& f) const;

 private:
  GroundRef ground_;
  std::vector<NamedOpen> opens_;
};

FuzzySet fz_meet(const FuzzySet& a, const FuzzySet& b);
/// Pointwise maximum; throws on an empty family.
FuzzySet fz_join(const std::vector<FuzzySet>& family);
FuzzySet fz_complement(const FuzzySet& f);
FuzzySet fz_indicator(const std::set<std::string>& subset, const GroundRef& ground);

ValidationReport fz_is_topology(const GroundRef& ground, const std::vector<NamedOpen>& family);
/// Smallest family containing the generators and the constants 0 and 1,
/// closed under pairwise meet and join.
FuzzyTopology fz_generate_topology(const GroundRef& ground, const std::vector<FuzzySet>& generators);
FuzzyTopology fz_generate_topology(const GroundRef& ground, const std::vector<NamedOpen>& generators);

}  // namespace fuzzytop
