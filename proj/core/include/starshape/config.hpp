#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "starshape/acceptability.hpp"
#include "starshape/index_catalog.hpp"

namespace starshape {

struct Period {
  std::string name;
  std::string start;
  std::string end;
};

enum class OutputFormat { csv, markdown, json };

struct AnalysisConfig {
  /// In file order. Empty means one period covering the whole panel.
  std::vector<Period> periods;
  TableLevels levels;
  double x_max = kDefaultXMax;
  double tol = kDefaultFamilyTol;
  OutputFormat format = OutputFormat::csv;
  std::uint64_t seed = 0;
};

/// Flat `key = value` text, `#` starts a comment. Keys:
/// period.<name>.start, period.<name>.end, level.tail, level.median, x_max,
/// tol, seed, format. Unknown keys and invalid values throw.
AnalysisConfig parse_config(std::istream& in);
AnalysisConfig load_config(const std::string& path);

OutputFormat parse_format(const std::string& name);
std::string format_extension(OutputFormat format);

}  // namespace starshape
