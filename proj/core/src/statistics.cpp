#include "starshape/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace starshape {

DescriptiveStats descriptive_stats(std::span<const double> samples) {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  DescriptiveStats out;
  std::vector<double> finite;
  finite.reserve(samples.size());
  out.minimum = std::numeric_limits<double>::infinity();
  out.maximum = -std::numeric_limits<double>::infinity();
  for (double v : samples) {
    if (std::isnan(v)) {
      ++out.nan_count;
      continue;
    }
    out.minimum = std::min(out.minimum, v);
    out.maximum = std::max(out.maximum, v);
    if (std::isinf(v)) {
      ++out.infinite_count;
    } else {
      finite.push_back(v);
    }
  }
  out.finite_count = finite.size();
  if (finite.size() < 2) {
    throw std::invalid_argument("descriptive_stats: fewer than 2 finite samples");
  }

  const double n = static_cast<double>(finite.size());
  if (std::all_of(finite.begin(), finite.end(), [&](double v) { return v == finite.front(); })) {
    out.mean = finite.front();
    out.stdev = 0.0;
    out.skewness = kNaN;
    out.kurtosis = kNaN;
    return out;
  }
  double sum = 0.0;
  for (double v : finite) sum += v;
  out.mean = sum / n;

  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : finite) {
    const double d = v - out.mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  out.stdev = std::sqrt(m2 / (n - 1.0));
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (m2 > 0.0 && finite.size() >= 3) {
    out.skewness = m3 / std::pow(m2, 1.5);
    out.kurtosis = m4 / (m2 * m2) - 3.0;
  } else {
    out.skewness = kNaN;
    out.kurtosis = kNaN;
  }
  return out;
}

}  // namespace starshape
