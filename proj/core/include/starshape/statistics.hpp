#pragma once

#include <cstddef>
#include <span>

namespace starshape {

/// Sample description in the layout of the summary tables.
///
/// Moments cover finite samples only; infinities are counted and still show
/// up in minimum/maximum. Skewness and excess kurtosis use 1/n central
/// moments, the standard deviation uses 1/(n-1). Degenerate moments (zero
/// spread, or fewer than three finite samples) are NaN.
struct DescriptiveStats {
  double mean = 0.0;
  double stdev = 0.0;
  double skewness = 0.0;
  double kurtosis = 0.0;
  double minimum = 0.0;
  double maximum = 0.0;
  std::size_t finite_count = 0;
  std::size_t infinite_count = 0;
  std::size_t nan_count = 0;
};

/// Throws std::invalid_argument with fewer than two finite samples.
DescriptiveStats descriptive_stats(std::span<const double> samples);

}  // namespace starshape
