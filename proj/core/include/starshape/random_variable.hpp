#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace starshape {

/// Weights handed to a constructor may deviate from summing to one by at most
/// this much; they are renormalized afterwards.
inline constexpr double kWeightSumTolerance = 1e-9;

/// Finite probability space: strictly positive outcome weights summing to one.
class FiniteSpace {
 public:
  explicit FiniteSpace(std::vector<double> weights);

  static std::shared_ptr<const FiniteSpace> uniform(std::size_t outcomes);
  static std::shared_ptr<const FiniteSpace> weighted(std::vector<double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }
  double weight(std::size_t i) const { return weights_[i]; }
  bool is_uniform() const noexcept { return uniform_; }

  /// Same outcome count and bitwise-identical weights.
  bool same_as(const FiniteSpace& other) const noexcept;

 private:
  std::vector<double> weights_;
  bool uniform_ = false;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

/// Probability measure on the outcomes of a FiniteSpace. Zero weights are
/// allowed (absolute continuity with respect to the base measure).
class Scenario {
 public:
  explicit Scenario(std::vector<double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }

 private:
  std::vector<double> weights_;
};

/// Real-valued payoff on a shared finite space. Immutable.
class RandomVariable {
 public:
  RandomVariable(SpacePtr space, std::vector<double> values);

  const FiniteSpace& space() const noexcept { return *space_; }
  const SpacePtr& space_ptr() const noexcept { return space_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  double min() const noexcept;
  double max() const noexcept;
  bool is_constant() const noexcept;

  /// True when both variables live on the same space (pointer or weights).
  bool shares_space_with(const RandomVariable& other) const noexcept;

  /// A new variable on the same space.
  RandomVariable with_values(std::vector<double> values) const;

 private:
  SpacePtr space_;
  std::vector<double> values_;
};

/// Builds a variable on a fresh space; equal weights unless given.
RandomVariable make_rv(std::vector<double> values,
                       std::optional<std::vector<double>> weights = std::nullopt);

RandomVariable constant_like(const RandomVariable& X, double c);

// Outcome-wise transforms. Two-variable forms require a shared space.
RandomVariable affine(const RandomVariable& X, double scale, double shift);
RandomVariable positive_part(const RandomVariable& X);
/// X^- = max(-X, 0), so -X^- is the pointwise min(X, 0).
RandomVariable negative_part(const RandomVariable& X);
RandomVariable pointwise_min(const RandomVariable& X, const RandomVariable& Y);
RandomVariable pointwise_min(const RandomVariable& X, double cap);
/// lambda * X + (1 - lambda) * Y.
RandomVariable mix(const RandomVariable& X, const RandomVariable& Y, double lambda);

/// The same payoffs viewed under a reweighting; zero-weight outcomes are
/// dropped so the result lives on a genuinely smaller space.
RandomVariable reweight(const RandomVariable& X, const Scenario& scenario);

/// Weighted sum in outcome index order.
double expectation(const RandomVariable& X);
double expectation(const RandomVariable& X, const Scenario& scenario);

}  // namespace starshape
