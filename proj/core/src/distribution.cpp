#include "starshape/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace starshape {
namespace {

void check_level(double u, const char* what) {
  if (!(u >= 0.0 && u <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": probability level outside [0,1]");
  }
}

std::vector<double> breakpoints(const Distribution& a, const Distribution& b) {
  std::vector<double> out(a.cumulative().begin(), a.cumulative().end());
  out.insert(out.end(), b.cumulative().begin(), b.cumulative().end());
  std::sort(out.begin(), out.end());
  for (double& u : out) u = std::min(u, 1.0);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool dominates_under(const Distribution& x, const Distribution& y, StochasticOrder order) {
  constexpr double kSlack = 1e-12;
  for (double u : breakpoints(x, y)) {
    if (order == StochasticOrder::first) {
      if (x.left_quantile(u) < y.left_quantile(u) - kSlack) return false;
    } else {
      if (x.integrated_quantile(u) < y.integrated_quantile(u) - kSlack) return false;
    }
  }
  return true;
}

}  // namespace

Distribution::Distribution(const RandomVariable& X) {
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) pairs.emplace_back(X[i], X.space().weight(i));
  build(std::move(pairs));
}

Distribution::Distribution(const RandomVariable& X, const Scenario& scenario) {
  if (scenario.size() != X.size()) {
    throw std::invalid_argument("Distribution: scenario/space outcome-count mismatch");
  }
  std::vector<std::pair<double, double>> pairs;
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (scenario.weights()[i] > 0.0) pairs.emplace_back(X[i], scenario.weights()[i]);
  }
  build(std::move(pairs));
}

Distribution::Distribution(std::span<const double> values, std::span<const double> probabilities) {
  if (values.size() != probabilities.size()) {
    throw std::invalid_argument("Distribution: values and probabilities differ in length");
  }
  std::vector<std::pair<double, double>> pairs;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (probabilities[i] > 0.0) pairs.emplace_back(values[i], probabilities[i]);
  }
  build(std::move(pairs));
}

void Distribution::build(std::vector<std::pair<double, double>> pairs) {
  if (pairs.empty()) throw std::invalid_argument("Distribution: no outcome with positive weight");
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [value, prob] : pairs) {
    if (!atoms_.empty() && atoms_.back() == value) {
      probs_.back() += prob;
    } else {
      atoms_.push_back(value);
      probs_.push_back(prob);
    }
  }
  cum_.resize(probs_.size());
  double running = 0.0;
  for (std::size_t k = 0; k < probs_.size(); ++k) {
    running += probs_[k];
    cum_[k] = running;
  }
  // The last cumulative weight is one by construction.
  cum_.back() = 1.0;
}

double Distribution::mean() const noexcept {
  double total = 0.0;
  for (std::size_t k = 0; k < atoms_.size(); ++k) total += probs_[k] * atoms_[k];
  return total;
}

std::size_t Distribution::quantile_index(double u) const {
  check_level(u, "left_quantile");
  auto it = std::lower_bound(cum_.begin(), cum_.end(), u - kCumulativeSlack);
  if (it == cum_.end()) return cum_.size() - 1;
  return static_cast<std::size_t>(it - cum_.begin());
}

double Distribution::left_quantile(double u) const {
  return atoms_[quantile_index(u)];
}

double Distribution::upper_quantile(double u) const {
  check_level(u, "upper_quantile");
  auto it = std::upper_bound(cum_.begin(), cum_.end(), u + kCumulativeSlack);
  if (it == cum_.end()) return atoms_.back();
  return atoms_[static_cast<std::size_t>(it - cum_.begin())];
}

double Distribution::integrated_quantile(double u) const {
  check_level(u, "integrated_quantile");
  double remaining = u;
  double total = 0.0;
  for (std::size_t k = 0; k < atoms_.size() && remaining > 0.0; ++k) {
    const double slab = std::min(probs_[k], remaining);
    total += slab * atoms_[k];
    remaining -= slab;
    if (k + 1 == atoms_.size() && remaining > 0.0) {
      // Rounding left a sliver of mass; it sits on the top atom.
      total += remaining * atoms_[k];
    }
  }
  return total;
}

double Distribution::cdf(double x) const noexcept {
  auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x);
  if (it == atoms_.begin()) return 0.0;
  return cum_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
}

double Distribution::prob_below(double x) const noexcept {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x);
  if (it == atoms_.begin()) return 0.0;
  return cum_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
}

double Distribution::upper_partial_moment(double y) const noexcept {
  double total = 0.0;
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    if (atoms_[k] > y) total += probs_[k] * (atoms_[k] - y);
  }
  return total;
}

double Distribution::lower_partial_moment(double y) const noexcept {
  double total = 0.0;
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    if (atoms_[k] < y) total += probs_[k] * (y - atoms_[k]);
  }
  return total;
}

double left_quantile(const RandomVariable& X, double u) {
  return Distribution(X).left_quantile(u);
}

double left_quantile(const RandomVariable& X, double u, const Scenario& scenario) {
  return Distribution(X, scenario).left_quantile(u);
}

double integrated_quantile(const RandomVariable& X, double u) {
  return Distribution(X).integrated_quantile(u);
}

double integrated_quantile(const RandomVariable& X, double u, const Scenario& scenario) {
  return Distribution(X, scenario).integrated_quantile(u);
}

bool dominates(const RandomVariable& X, const RandomVariable& Y, StochasticOrder order,
               std::span<const Scenario> scenarios) {
  if (!X.shares_space_with(Y)) {
    throw std::invalid_argument("dominates: random variables live on different spaces");
  }
  if (scenarios.empty()) return dominates_under(Distribution(X), Distribution(Y), order);
  return std::all_of(scenarios.begin(), scenarios.end(), [&](const Scenario& q) {
    return dominates_under(Distribution(X, q), Distribution(Y, q), order);
  });
}

}  // namespace starshape
