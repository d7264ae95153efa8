#pragma once

#include <string>
#include <vector>

#include "fuzzytop/cylinder.hpp"

namespace fuzzytop::testing {

inline Rational q(const char* s) { return Rational::parse(s); }

inline GroundRef abc(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return make_ground(names);
}

inline FuzzySet fz(const GroundRef& g, std::vector<const char*> values) {
  std::vector<Rational> v;
  for (const char* s : values) v.push_back(q(s));
  return FuzzySet(g, std::move(v));
}

inline FuzzySet constant(const GroundRef& g, const char* value) { return FuzzySet::constant(g, q(value)); }

/// {empty, whole} plus the named constants.
inline FuzzyTopology constants(const GroundRef& g, std::vector<std::pair<std::string, const char*>> named) {
  std::vector<NamedOpen> opens{{"empty", constant(g, "0")}, {"X", constant(g, "1")}};
  for (const auto& [name, v] : named) opens.push_back({name, constant(g, v)});
  return FuzzyTopology(g, std::move(opens));
}

inline IntervalSet iv(const char* lo, const char* hi, bool lo_closed, bool hi_closed) {
  return make_interval(q(lo), q(hi), lo_closed, hi_closed);
}

/// Levels k/n for k = 0..n-1.
inline std::vector<Rational> levels(long n) {
  std::vector<Rational> out;
  for (long k = 0; k < n; ++k) out.emplace_back(k, n);
  return out;
}

}  // namespace fuzzytop::testing
