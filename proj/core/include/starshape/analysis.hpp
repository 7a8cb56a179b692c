#pragma once

#include <array>
#include <string>
#include <vector>

#include "starshape/config.hpp"
#include "starshape/panel.hpp"
#include "starshape/statistics.hpp"

namespace starshape {

inline constexpr std::array<const char*, 12> kSummaryRows = {
    "Returns", "VaR", "ES", "RAROC", "RAROC_SS", "GLR", "GLR_SS", "RDR", "RDR_SS",
    "Min", "Median", "Max"};
inline constexpr std::array<const char*, 6> kSummaryColumns = {
    "Mean", "Stdev", "Skewness", "Kurtosis", "Minimum", "Maximum"};

struct SummaryRow {
  std::string name;
  DescriptiveStats stats;
};

/// One period of the empirical pipeline: 12 rows x 6 columns plus per-asset
/// index values. Row r (r >= 1) summarizes index r over assets.
struct SummaryTable {
  std::string period;
  std::string start;
  std::string end;
  std::size_t observations = 0;
  std::vector<std::string> tickers;
  std::vector<SummaryRow> rows;
  /// values[asset][k]: the eleven index values (eight indexes, Min, Median, Max).
  std::vector<std::vector<double>> values;
  std::vector<double> mean_returns;
};

struct AnalysisResult {
  std::vector<SummaryTable> tables;
  std::vector<std::string> warnings;
};

/// Summary statistics that never throw: fewer than two finite samples give
/// NaN moments, with min/max still reported when any sample exists.
DescriptiveStats summarize(const std::vector<double>& samples);

/// Evaluates the table indexes for every asset and period. Periods with
/// fewer than 2 observations throw; fewer than 30 produce a warning.
AnalysisResult run_analysis(const ReturnPanel& panel, const AnalysisConfig& config);

std::string render(const SummaryTable& table, OutputFormat format);

}  // namespace starshape
