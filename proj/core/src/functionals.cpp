#include "starshape/functionals.hpp"

#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace starshape {
namespace {

std::string with_level(const char* stem, double p) {
  std::ostringstream os;
  os << stem << '(' << p << ')';
  return os.str();
}

void warn_once(const std::string& key, const std::string& message) {
  static std::mutex mutex;
  static std::set<std::string> seen;
  std::lock_guard lock(mutex);
  if (seen.insert(key).second) std::cerr << "warning: " << message << '\n';
}

}  // namespace

RiskFunctional::RiskFunctional(std::string name, Evaluator evaluate, RiskFlags flags)
    : name_(std::move(name)), evaluate_(std::move(evaluate)), flags_(flags) {
  if (!evaluate_) throw std::invalid_argument("RiskFunctional: empty evaluator");
}

DeviationFunctional::DeviationFunctional(std::string name, Evaluator evaluate, DeviationFlags flags)
    : name_(std::move(name)), evaluate_(std::move(evaluate)), flags_(flags) {
  if (!evaluate_) throw std::invalid_argument("DeviationFunctional: empty evaluator");
}

namespace functionals {

RiskFunctional value_at_risk(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("value_at_risk: level outside [0,1]");
  return RiskFunctional(with_level("VaR", p), [p](const RandomVariable& X) { return var(X, p); },
                        {.monetary = true, .positively_homogeneous = true, .convex = false,
                         .star_shaped = true, .law_invariant = true});
}

RiskFunctional expected_shortfall(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("expected_shortfall: level outside [0,1]");
  return RiskFunctional(with_level("ES", p), [p](const RandomVariable& X) { return es(X, p); },
                        {.monetary = true, .positively_homogeneous = true, .convex = true,
                         .star_shaped = true, .law_invariant = true});
}

RiskFunctional expectile_var(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("expectile_var: level must lie in (0,1)");
  return RiskFunctional(with_level("EVaR", p), [p](const RandomVariable& X) { return evar(X, p); },
                        {.monetary = true, .positively_homogeneous = true, .convex = p <= 0.5,
                         .star_shaped = true, .law_invariant = true});
}

RiskFunctional distortion(const Distortion& g) {
  return RiskFunctional("Choquet", [g](const RandomVariable& X) { return choquet(X, g); },
                        {.monetary = true, .positively_homogeneous = true,
                         .convex = g.is_concave(), .star_shaped = true, .law_invariant = true});
}

RiskFunctional benchmark_loss_var(const LossThreshold& theta) {
  return RiskFunctional("LVaR", [theta](const RandomVariable& X) { return lvar(X, theta); },
                        {.monetary = true, .positively_homogeneous = false, .convex = false,
                         .star_shaped = true, .law_invariant = true});
}

RiskFunctional expected_loss() {
  return RiskFunctional("E[-X]", [](const RandomVariable& X) { return -Distribution(X).mean(); },
                        {.monetary = true, .positively_homogeneous = true, .convex = true,
                         .star_shaped = true, .law_invariant = true});
}

RiskFunctional mean_reward() {
  return RiskFunctional("E", [](const RandomVariable& X) { return Distribution(X).mean(); },
                        {.monetary = true, .positively_homogeneous = true, .convex = true,
                         .star_shaped = true, .law_invariant = true});
}

RiskFunctional quantile_reward(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("quantile_reward: level outside [0,1]");
  return RiskFunctional(with_level("-VaR", p), [p](const RandomVariable& X) { return -var(X, p); },
                        {.monetary = true, .positively_homogeneous = true, .convex = false,
                         .star_shaped = true, .law_invariant = true});
}

RiskFunctional reward_of(const RiskFunctional& rho) {
  return RiskFunctional("-" + rho.name(), [rho](const RandomVariable& X) { return -rho(X); },
                        rho.flags());
}

}  // namespace functionals

double es_deviation(const RandomVariable& X, double p) {
  if (X.is_constant()) return 0.0;
  const Distribution law(X);
  // ES is translation covariant: ES^p(X - EX) = ES^p(X) + EX.
  return std::max(0.0, es(law, p) + law.mean());
}

double interquantile_range(const RandomVariable& X, double p_lo, double p_hi) {
  if (!(p_lo >= 0.0 && p_hi <= 1.0 && p_lo < p_hi)) {
    throw std::invalid_argument("interquantile_range: need 0 <= p_lo < p_hi <= 1");
  }
  const Distribution law(X);
  return var(law, p_lo) - var(law, p_hi);
}

double centered_deviation(const RandomVariable& X, const RiskFunctional& rho) {
  if (X.is_constant()) return 0.0;
  const double raw = rho(affine(X, 1.0, -Distribution(X).mean()));
  if (raw < 0.0) {
    warn_once(rho.name(), "centered deviation of " + rho.name() +
                              " is negative; the functional is not expectation-bounded, clamping at 0");
    return 0.0;
  }
  return raw;
}

namespace deviations {

DeviationFunctional es_centered(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("es_centered: level outside [0,1]");
  return DeviationFunctional(with_level("ESdev", p),
                             [p](const RandomVariable& X) { return es_deviation(X, p); },
                             {.translation_insensitive = true, .positively_homogeneous = true,
                              .star_shaped = true});
}

DeviationFunctional interquantile(double p_lo, double p_hi) {
  if (!(p_lo >= 0.0 && p_hi <= 1.0 && p_lo < p_hi)) {
    throw std::invalid_argument("interquantile: need 0 <= p_lo < p_hi <= 1");
  }
  std::ostringstream name;
  name << "IQR(" << p_lo << ',' << p_hi << ')';
  return DeviationFunctional(
      name.str(), [p_lo, p_hi](const RandomVariable& X) { return interquantile_range(X, p_lo, p_hi); },
      {.translation_insensitive = true, .positively_homogeneous = true, .star_shaped = true});
}

DeviationFunctional centered(const RiskFunctional& rho) {
  return DeviationFunctional("centered " + rho.name(),
                             [rho](const RandomVariable& X) { return centered_deviation(X, rho); },
                             {.translation_insensitive = true,
                              .positively_homogeneous = rho.flags().positively_homogeneous,
                              .star_shaped = rho.flags().star_shaped});
}

}  // namespace deviations

}  // namespace starshape
