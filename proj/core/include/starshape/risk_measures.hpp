#pragma once

#include <vector>

#include "starshape/distribution.hpp"
#include "starshape/random_variable.hpp"

namespace starshape {

// Value at risk, VaR^p(X) = -F^{-1}(p) with the left quantile; VaR^0 is the
// negative essential infimum.
double var(const Distribution& law, double p);
double var(const RandomVariable& X, double p);
double var(const RandomVariable& X, double p, const Scenario& scenario);

// Expected shortfall, the average of VaR^s over s in [0, p]; ES^0 = VaR^0.
double es(const Distribution& law, double p);
double es(const RandomVariable& X, double p);
double es(const RandomVariable& X, double p, const Scenario& scenario);

/// p * E[(X - y)^+] - (1 - p) * E[(X - y)^-], divided by 1 + E|X|.
double expectile_residual(const Distribution& law, double p, double y);

/// Root of the expectile equation, p in (0, 1). Bracketed secant with
/// bisection fallback; stops once the scaled residual is below 1e-12 or the
/// bracket is narrower than 1e-14 * (1 + |y|).
double expectile(const Distribution& law, double p);
double expectile(const RandomVariable& X, double p);
double expectile(const RandomVariable& X, double p, const Scenario& scenario);

/// Expectile value at risk, -expectile.
double evar(const Distribution& law, double p);
double evar(const RandomVariable& X, double p);
double evar(const RandomVariable& X, double p, const Scenario& scenario);

/// Nondecreasing g on [0,1] with g(0) = 0 and g(1) = 1.
class Distortion {
 public:
  enum class Kind { identity, step, es_clamp, piecewise_linear };

  static Distortion identity();
  /// g(y) = 1 when y >= level (boundary included), else 0. Reproduces VaR^level.
  static Distortion step(double level);
  /// g(y) = min(y / level, 1). Reproduces ES^level.
  static Distortion es_clamp(double level);
  /// Linear interpolation through knots (x_0 = 0 < ... < x_k = 1, y nondecreasing).
  static Distortion piecewise_linear(std::vector<double> xs, std::vector<double> ys);

  double operator()(double y) const;
  Kind kind() const noexcept { return kind_; }
  /// Level for step/es_clamp, 0 otherwise.
  double level() const noexcept { return level_; }
  bool is_concave() const noexcept;

 private:
  Distortion(Kind kind, double level, std::vector<double> xs, std::vector<double> ys);

  Kind kind_;
  double level_ = 0.0;
  std::vector<double> xs_;
  std::vector<double> ys_;
};

/// Discrete Choquet integral of the loss -X: sum over distinct loss levels of
/// loss * (g(S_j) - g(S_{j+1})), S_j = P(-X >= loss_j).
double choquet(const Distribution& law, const Distortion& g);
double choquet(const RandomVariable& X, const Distortion& g);
double choquet(const RandomVariable& X, const Distortion& g, const Scenario& scenario);

/// Right-continuous, nondecreasing, piecewise-constant theta on [0, inf):
/// theta(t) = levels[j] for breakpoints[j] <= t < breakpoints[j+1].
class LossThreshold {
 public:
  LossThreshold(std::vector<double> breakpoints, std::vector<double> levels);
  static LossThreshold constant(double level);

  double operator()(double t) const;
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<double>& levels() const noexcept { return levels_; }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> levels_;
};

/// Benchmark-loss VaR, sup over t >= 0 of VaR^{theta(t)}(X) - t. With a
/// piecewise-constant theta the objective falls on each constancy interval,
/// so the supremum sits on a left endpoint.
double lvar(const Distribution& law, const LossThreshold& theta);
double lvar(const RandomVariable& X, const LossThreshold& theta);

}  // namespace starshape
