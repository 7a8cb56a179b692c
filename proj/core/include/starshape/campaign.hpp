#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "starshape/axioms.hpp"
#include "starshape/index_catalog.hpp"

namespace starshape {

struct CampaignOptions {
  std::uint64_t seed = 20240101;
  int trials = 1000;
  std::size_t min_outcomes = 2;
  std::size_t max_outcomes = 50;
  TableLevels levels;
  /// Golden-section restarts for the monotone reward-deviation hull. The two
  /// table deviations are piecewise linear between truncation breakpoints,
  /// where the breakpoints alone are exact; the restarts only add coverage.
  int rdr_restarts = 64;
};

struct Violation {
  std::string index;
  std::string property;
  int trial = 0;
  std::string detail;
};

struct CampaignReport {
  CampaignOptions options;
  int trials_run = 0;
  /// Indexes checked for the axioms, in report order.
  std::vector<std::string> indexes;
  std::vector<Violation> violations;
  /// Indexes the campaign must show to be non-quasi-concave.
  std::map<std::string, std::optional<QuasiConcavityViolation>> required_counterexamples;
  /// Indexes that must stay quasi-concave: number of violations seen.
  std::map<std::string, int> quasi_concave_failures;
  /// Informational: the plain reward-deviation ratios are not monotone.
  std::map<std::string, std::string> plain_rdr_monotonicity;
  double seconds = 0.0;

  bool passed() const;
  std::string to_text() const;
};

/// Seeded property campaign over the eight table indexes (reward-deviation
/// ones through their monotone hull) and their Min/Median/Max combinations.
/// Trials run in parallel with per-trial seeds derived from the root seed;
/// the report is identical for identical options.
CampaignReport run_axiom_campaign(const CampaignOptions& options = {});

}  // namespace starshape
