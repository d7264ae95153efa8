#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "fuzzytop/retraction.hpp"

namespace fuzzytop {

struct SweepConfig {
  std::uint64_t seed = 7;
  std::size_t cases = 100;
  long grid = 64;  // pointwise laws are checked at i/grid
  long oracle_resolution = 64;
  /// When set, sweeps run on this topology instead of random ones.
  std::optional<FuzzyTopology> topology;
};

struct SweepResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t oracle_checks = 0;
  std::size_t oracle_failures = 0;
  std::string first_failure;
  std::map<std::string, std::size_t> counters;

  [[nodiscard]] bool ok() const { return failures == 0 && oracle_failures == 0; }
};

// Random instances use |X| <= 6, at most 4 generators and denominators <= 32.
SweepResult sweep_psi_laws(const SweepConfig& cfg);
SweepResult sweep_round_trip(const SweepConfig& cfg);
/// Exhaustive over every subset of ground sets of size 1..5; ignores `cases`.
SweepResult sweep_indicator_compat(const SweepConfig& cfg);
SweepResult sweep_retraction(const SweepConfig& cfg);
SweepResult sweep_sigma(const SweepConfig& cfg);
SweepResult sweep_path_laws(const SweepConfig& cfg);
/// Every path generated by sweep_path_laws (same config) against the subbasis.
SweepResult sweep_dsl_continuity(const SweepConfig& cfg);
SweepResult sweep_complement(const SweepConfig& cfg);

/// Continuity witnesses at n random anchors satisfying the precondition,
/// cycling through t = 0, t = 1 and 0 < t < 1.
std::vector<BoxWitness> random_witnesses(const FuzzyTopology& topo, std::size_t n, std::uint64_t seed);

}  // namespace fuzzytop
