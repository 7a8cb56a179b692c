#include "starshape/random_variable.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace starshape {
namespace {

void normalize_weights(std::vector<double>& weights, bool allow_zero, const char* what) {
  if (weights.empty()) {
    throw std::invalid_argument(std::string(what) + ": at least one outcome required");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0 || (!allow_zero && w == 0.0)) {
      throw std::invalid_argument(std::string(what) + ": weights must be " +
                                  (allow_zero ? "nonnegative" : "positive") + " and finite");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightSumTolerance) {
    throw std::invalid_argument(std::string(what) + ": weights sum to " +
                                std::to_string(total) + ", expected 1");
  }
  for (double& w : weights) w /= total;
}

void require_shared(const RandomVariable& X, const RandomVariable& Y) {
  if (!X.shares_space_with(Y)) {
    throw std::invalid_argument("random variables live on different spaces");
  }
}

}  // namespace

FiniteSpace::FiniteSpace(std::vector<double> weights) : weights_(std::move(weights)) {
  normalize_weights(weights_, false, "FiniteSpace");
  uniform_ = std::all_of(weights_.begin(), weights_.end(),
                         [&](double w) { return w == weights_.front(); });
}

std::shared_ptr<const FiniteSpace> FiniteSpace::uniform(std::size_t outcomes) {
  if (outcomes == 0) throw std::invalid_argument("FiniteSpace: at least one outcome required");
  return std::make_shared<const FiniteSpace>(
      std::vector<double>(outcomes, 1.0 / static_cast<double>(outcomes)));
}

std::shared_ptr<const FiniteSpace> FiniteSpace::weighted(std::vector<double> weights) {
  return std::make_shared<const FiniteSpace>(std::move(weights));
}

bool FiniteSpace::same_as(const FiniteSpace& other) const noexcept {
  return this == &other || weights_ == other.weights_;
}

Scenario::Scenario(std::vector<double> weights) : weights_(std::move(weights)) {
  normalize_weights(weights_, true, "Scenario");
}

RandomVariable::RandomVariable(SpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw std::invalid_argument("RandomVariable: null space");
  if (values_.size() != space_->size()) {
    throw std::invalid_argument("RandomVariable: " + std::to_string(values_.size()) +
                                " values for " + std::to_string(space_->size()) + " outcomes");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("RandomVariable: non-finite value");
  }
}

double RandomVariable::min() const noexcept {
  return *std::min_element(values_.begin(), values_.end());
}

double RandomVariable::max() const noexcept {
  return *std::max_element(values_.begin(), values_.end());
}

bool RandomVariable::is_constant() const noexcept {
  return std::all_of(values_.begin(), values_.end(),
                     [&](double v) { return v == values_.front(); });
}

bool RandomVariable::shares_space_with(const RandomVariable& other) const noexcept {
  return space_ == other.space_ || space_->same_as(*other.space_);
}

RandomVariable RandomVariable::with_values(std::vector<double> values) const {
  return RandomVariable(space_, std::move(values));
}

RandomVariable make_rv(std::vector<double> values, std::optional<std::vector<double>> weights) {
  if (values.empty()) throw std::invalid_argument("make_rv: empty input");
  SpacePtr space;
  if (weights) {
    if (weights->size() != values.size()) {
      throw std::invalid_argument("make_rv: weights and values differ in length");
    }
    space = FiniteSpace::weighted(std::move(*weights));
  } else {
    space = FiniteSpace::uniform(values.size());
  }
  return RandomVariable(std::move(space), std::move(values));
}

RandomVariable constant_like(const RandomVariable& X, double c) {
  return X.with_values(std::vector<double>(X.size(), c));
}

RandomVariable affine(const RandomVariable& X, double scale, double shift) {
  std::vector<double> out(X.size());
  std::transform(X.values().begin(), X.values().end(), out.begin(),
                 [=](double v) { return scale * v + shift; });
  return X.with_values(std::move(out));
}

RandomVariable positive_part(const RandomVariable& X) {
  std::vector<double> out(X.size());
  std::transform(X.values().begin(), X.values().end(), out.begin(),
                 [](double v) { return v > 0.0 ? v : 0.0; });
  return X.with_values(std::move(out));
}

RandomVariable negative_part(const RandomVariable& X) {
  std::vector<double> out(X.size());
  std::transform(X.values().begin(), X.values().end(), out.begin(),
                 [](double v) { return v < 0.0 ? -v : 0.0; });
  return X.with_values(std::move(out));
}

RandomVariable pointwise_min(const RandomVariable& X, const RandomVariable& Y) {
  require_shared(X, Y);
  std::vector<double> out(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) out[i] = std::min(X[i], Y[i]);
  return X.with_values(std::move(out));
}

RandomVariable pointwise_min(const RandomVariable& X, double cap) {
  std::vector<double> out(X.size());
  std::transform(X.values().begin(), X.values().end(), out.begin(),
                 [=](double v) { return std::min(v, cap); });
  return X.with_values(std::move(out));
}

RandomVariable mix(const RandomVariable& X, const RandomVariable& Y, double lambda) {
  require_shared(X, Y);
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("mix: lambda must lie in [0,1]");
  }
  std::vector<double> out(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) out[i] = lambda * X[i] + (1.0 - lambda) * Y[i];
  return X.with_values(std::move(out));
}

RandomVariable reweight(const RandomVariable& X, const Scenario& scenario) {
  if (scenario.size() != X.size()) {
    throw std::invalid_argument("reweight: scenario has " + std::to_string(scenario.size()) +
                                " outcomes, variable has " + std::to_string(X.size()));
  }
  std::vector<double> weights;
  std::vector<double> values;
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (scenario.weights()[i] > 0.0) {
      weights.push_back(scenario.weights()[i]);
      values.push_back(X[i]);
    }
  }
  return RandomVariable(FiniteSpace::weighted(std::move(weights)), std::move(values));
}

double expectation(const RandomVariable& X) {
  double total = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) total += X.space().weight(i) * X[i];
  return total;
}

double expectation(const RandomVariable& X, const Scenario& scenario) {
  if (scenario.size() != X.size()) {
    throw std::invalid_argument("expectation: scenario/space outcome-count mismatch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) total += scenario.weights()[i] * X[i];
  return total;
}

}  // namespace starshape
