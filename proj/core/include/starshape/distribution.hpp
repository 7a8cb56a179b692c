#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "starshape/random_variable.hpp"

namespace starshape {

/// Slack used when comparing cumulative weights against a probability level;
/// absorbs rounding in partial sums of weights.
inline constexpr double kCumulativeSlack = 1e-12;

/// Law of a random variable: distinct sorted atoms with their probabilities.
///
/// Every quantity here depends only on the law, so two variables with the
/// same distribution produce bitwise-identical results. Quantiles are the
/// left-continuous inverse inf{x : F(x) >= u}, exact at atoms.
class Distribution {
 public:
  explicit Distribution(const RandomVariable& X);
  Distribution(const RandomVariable& X, const Scenario& scenario);
  /// Unsorted (value, probability) pairs; zero probabilities are dropped.
  Distribution(std::span<const double> values, std::span<const double> probabilities);

  std::size_t size() const noexcept { return atoms_.size(); }
  std::span<const double> atoms() const noexcept { return atoms_; }
  std::span<const double> probabilities() const noexcept { return probs_; }
  /// cumulative()[k] = F(atoms()[k]).
  std::span<const double> cumulative() const noexcept { return cum_; }

  double min() const noexcept { return atoms_.front(); }
  double max() const noexcept { return atoms_.back(); }
  /// Expectation summed over sorted atoms.
  double mean() const noexcept;

  double left_quantile(double u) const;
  /// inf{x : F(x) > u}; differs from the left quantile only at flat parts of F.
  double upper_quantile(double u) const;
  /// Integral of the left quantile over [0, u].
  double integrated_quantile(double u) const;

  /// P(X <= x) and P(X < x).
  double cdf(double x) const noexcept;
  double prob_below(double x) const noexcept;

  /// E[(X - y)^+] and E[(X - y)^-].
  double upper_partial_moment(double y) const noexcept;
  double lower_partial_moment(double y) const noexcept;

  /// Index of the first atom whose cumulative weight reaches u.
  std::size_t quantile_index(double u) const;

 private:
  void build(std::vector<std::pair<double, double>> pairs);

  std::vector<double> atoms_;
  std::vector<double> probs_;
  std::vector<double> cum_;
};

double left_quantile(const RandomVariable& X, double u);
double left_quantile(const RandomVariable& X, double u, const Scenario& scenario);
double integrated_quantile(const RandomVariable& X, double u);
double integrated_quantile(const RandomVariable& X, double u, const Scenario& scenario);

enum class StochasticOrder { first = 1, second = 2 };

/// X dominates Y under every scenario in the set: quantile dominance (first
/// order) or integrated-quantile dominance (second order), checked at every
/// breakpoint of either distribution with 1e-12 slack. An empty scenario set
/// means the base measure only.
bool dominates(const RandomVariable& X, const RandomVariable& Y, StochasticOrder order,
               std::span<const Scenario> scenarios = {});

}  // namespace starshape
