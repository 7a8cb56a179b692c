#pragma once

#include <functional>
#include <string>

#include "starshape/random_variable.hpp"
#include "starshape/risk_measures.hpp"

namespace starshape {

/// Capability claims of a risk functional. They are targets for the property
/// suite, never assumptions the evaluators rely on.
struct RiskFlags {
  bool monetary = true;
  bool positively_homogeneous = false;
  bool convex = false;
  bool star_shaped = false;
  bool law_invariant = true;
};

/// Named evaluator X -> real.
///
/// Reward measures use the same type with the opposite sign convention
/// (higher is better); for them `convex` means "the negative of a convex
/// risk measure".
class RiskFunctional {
 public:
  using Evaluator = std::function<double(const RandomVariable&)>;

  RiskFunctional(std::string name, Evaluator evaluate, RiskFlags flags);

  double operator()(const RandomVariable& X) const { return evaluate_(X); }
  const std::string& name() const noexcept { return name_; }
  const RiskFlags& flags() const noexcept { return flags_; }

 private:
  std::string name_;
  Evaluator evaluate_;
  RiskFlags flags_;
};

namespace functionals {

RiskFunctional value_at_risk(double p);
RiskFunctional expected_shortfall(double p);
RiskFunctional expectile_var(double p);
RiskFunctional distortion(const Distortion& g);
RiskFunctional benchmark_loss_var(const LossThreshold& theta);
/// E[-X].
RiskFunctional expected_loss();

/// E[X] as a reward.
RiskFunctional mean_reward();
/// -VaR^p(X), the p-quantile as a reward.
RiskFunctional quantile_reward(double p);
/// -rho(X).
RiskFunctional reward_of(const RiskFunctional& rho);

}  // namespace functionals

struct DeviationFlags {
  bool translation_insensitive = true;
  bool positively_homogeneous = false;
  bool star_shaped = false;
};

/// Named evaluator X -> [0, inf), zero on constants.
class DeviationFunctional {
 public:
  using Evaluator = std::function<double(const RandomVariable&)>;

  DeviationFunctional(std::string name, Evaluator evaluate, DeviationFlags flags);

  double operator()(const RandomVariable& X) const { return evaluate_(X); }
  const std::string& name() const noexcept { return name_; }
  const DeviationFlags& flags() const noexcept { return flags_; }

 private:
  std::string name_;
  Evaluator evaluate_;
  DeviationFlags flags_;
};

/// ES^p(X - E[X]).
double es_deviation(const RandomVariable& X, double p);
/// VaR^{p_lo}(X) - VaR^{p_hi}(X), p_lo < p_hi.
double interquantile_range(const RandomVariable& X, double p_lo, double p_hi);
/// rho(X - E[X]) clamped at zero; a negative raw value is reported once per
/// functional name on stderr.
double centered_deviation(const RandomVariable& X, const RiskFunctional& rho);

namespace deviations {

DeviationFunctional es_centered(double p);
DeviationFunctional interquantile(double p_lo, double p_hi);
DeviationFunctional centered(const RiskFunctional& rho);

}  // namespace deviations

}  // namespace starshape
