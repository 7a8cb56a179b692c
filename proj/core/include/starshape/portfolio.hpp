#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starshape/acceptability.hpp"

namespace starshape {

/// Named asset payoffs on one finite space.
class Market {
 public:
  Market(std::vector<std::string> names, std::vector<RandomVariable> assets);

  std::size_t size() const noexcept { return assets_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<RandomVariable>& assets() const noexcept { return assets_; }
  /// Pairs of outcome-wise identical assets, reported rather than rejected.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// sum_i w_i Y_i.
  RandomVariable portfolio(const std::vector<double>& weights) const;

 private:
  std::vector<std::string> names_;
  std::vector<RandomVariable> assets_;
  std::vector<std::string> warnings_;
};

struct OptimizerOptions {
  int restarts = 64;
  double tol = 1e-6;
  std::uint64_t seed = 7;
  double x_max = kDefaultXMax;
};

enum class Certification { heuristic, convex_certified };

struct LevelProbe {
  double level = 0.0;
  bool feasible = false;
  /// Smallest rho_level found by the inner search.
  double inner_min = 0.0;
};

struct OptimizationResult {
  std::vector<double> weights;
  ExtendedAcceptability achieved = ExtendedAcceptability::exact(0.0);
  Certification certification = Certification::heuristic;
  /// No weight vector reaches mu > 1e-10.
  bool empty_feasible = false;
  /// Best weights sit on the relaxed boundary mu ~ 1e-10.
  bool boundary = false;
  int restarts = 0;
  int outer_iterations = 0;
  std::vector<LevelProbe> trace;
};

/// Maximizes raroc(mu, rho) over long-only weights that sum to one. Bisects on
/// the level x with raroc_family_rho; level x is feasible when the inner
/// pattern search on the simplex drives rho_x below or to zero.
OptimizationResult maximize_acceptability(const Market& market, const RiskFunctional& mu,
                                          const RiskFunctional& rho,
                                          const OptimizerOptions& options = {});

}  // namespace starshape
