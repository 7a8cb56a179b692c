// Independent reference computations for the tests. Each one recomputes a
// quantity from first principles with a different algorithm (and long double
// arithmetic) from the library's.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Law = std::vector<std::pair<long double, long double>>;  // (value, weight), sorted

inline Law law_of(const std::vector<double>& values, const std::vector<double>& weights) {
  Law out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (weights[i] > 0) out.emplace_back(values[i], weights[i]);
  }
  std::sort(out.begin(), out.end());
  long double total = 0;
  for (const auto& [v, w] : out) total += w;
  for (auto& [v, w] : out) w /= total;
  return out;
}

inline std::vector<double> equal_weights(std::size_t n) { return std::vector<double>(n, 1.0 / n); }

/// inf{x : F(x) >= u} by a linear scan.
inline double left_quantile(const Law& law, double u) {
  long double cum = 0;
  for (const auto& [v, w] : law) {
    cum += w;
    if (cum >= static_cast<long double>(u) - 1e-12L) return static_cast<double>(v);
  }
  return static_cast<double>(law.back().first);
}

/// Equal-weight sample quantile: the ceil(u n)-th order statistic.
inline double order_statistic_quantile(std::vector<double> values, double u) {
  std::sort(values.begin(), values.end());
  const auto n = values.size();
  const double pos = std::ceil(u * n - 1e-9);
  const std::size_t k = pos < 1 ? 0 : std::min(n - 1, static_cast<std::size_t>(pos) - 1);
  return values[k];
}

/// int_0^u F^{-1}(s) ds as a sum over atoms of value x |[0,u] cap [F(x-), F(x)]|.
inline long double integrated_quantile(const Law& law, double u) {
  long double lo = 0, total = 0;
  for (const auto& [v, w] : law) {
    const long double hi = lo + w;
    const long double overlap = std::max<long double>(0, std::min<long double>(hi, u) - lo);
    total += v * overlap;
    lo = hi;
  }
  return total;
}

inline double es(const Law& law, double p) {
  if (p == 0) return -static_cast<double>(law.front().first);
  return static_cast<double>(-integrated_quantile(law, p) / p);
}

inline double mean(const Law& law) {
  long double m = 0;
  for (const auto& [v, w] : law) m += v * w;
  return static_cast<double>(m);
}

/// Choquet integral of the loss L = -X by the layer-cake formula
/// int_0^inf g(P(L>t)) dt - int_{-inf}^0 (1 - g(P(L>t))) dt.
inline double choquet(const Law& law, const std::function<double(double)>& g) {
  std::vector<std::pair<long double, long double>> loss;
  for (const auto& [v, w] : law) loss.emplace_back(-v, w);
  std::sort(loss.begin(), loss.end());
  std::vector<long double> points{0};
  for (const auto& [l, w] : loss) points.push_back(l);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  long double total = 0;
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const long double a = points[k], b = points[k + 1];
    long double survival = 0;
    for (const auto& [l, w] : loss) {
      if (l > a) survival += w;
    }
    const long double gs = g(static_cast<double>(survival));
    total += a >= 0 ? gs * (b - a) : -(1 - gs) * (b - a);
  }
  return static_cast<double>(total);
}

/// Expectile by long-double bisection on the defining equation.
inline double expectile(const Law& law, double p) {
  long double lo = law.front().first, hi = law.back().first;
  for (int it = 0; it < 300; ++it) {
    const long double y = (lo + hi) / 2;
    long double up = 0, down = 0;
    for (const auto& [v, w] : law) {
      if (v > y) up += w * (v - y);
      if (v < y) down += w * (y - v);
    }
    if (p * up - (1 - p) * down > 0) {
      lo = y;
    } else {
      hi = y;
    }
  }
  return static_cast<double>((lo + hi) / 2);
}

/// Random position generator shared by the tests.
struct Generator {
  std::mt19937_64 rng;
  explicit Generator(std::uint64_t seed) : rng(seed) {}

  std::size_t size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
  bool coin(double p = 0.5) { return uniform(0, 1) < p; }

  std::vector<double> weights(std::size_t n, bool equal) {
    if (equal) return equal_weights(n);
    std::vector<double> w(n);
    for (auto& x : w) x = 0.05 + std::exponential_distribution<double>(1.0)(rng);
    const double s = std::accumulate(w.begin(), w.end(), 0.0);
    for (auto& x : w) x /= s;
    return w;
  }

  std::vector<double> values(std::size_t n) {
    std::vector<double> v(n);
    std::normal_distribution<double> z(0.0, 1.0);
    const int kind = static_cast<int>(size(0, 2));
    const double m = uniform(-0.5, 1.0), s = uniform(0.2, 2.0);
    for (auto& x : v) {
      if (kind == 0) x = m + s * z(rng);
      if (kind == 1) x = static_cast<double>(std::uniform_int_distribution<int>(-3, 5)(rng));
      if (kind == 2) x = m + s * z(rng) / std::sqrt(0.1 + uniform(0, 1));
    }
    return v;
  }
};

}  // namespace oracle
