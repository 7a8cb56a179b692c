#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "starshape/functionals.hpp"
#include "starshape/index_catalog.hpp"

namespace starshape {

/// Tolerance used by the index predicates: 1e-9 absolute, relative for
/// values above one.
inline constexpr double kIndexTol = 1e-9;

/// a >= b - tol on the extended half line (capped values count as +inf).
bool at_least(const ExtendedAcceptability& a, const ExtendedAcceptability& b,
              double tol = kIndexTol);
/// |a - b| <= tol relative, infinities equal only to infinities.
bool same_value(const ExtendedAcceptability& a, const ExtendedAcceptability& b,
                double tol = kIndexTol);

/// Failure description, or nullopt when the property holds on the inputs.
using PropertyResult = std::optional<std::string>;

/// Requires X >= Y outcome-wise; checks alpha(X) >= alpha(Y).
PropertyResult check_monotone(const IndexSpec& index, const RandomVariable& X,
                              const RandomVariable& Y);
/// alpha(lambda X) <= alpha(X) and nonincreasing along the increasing grid.
PropertyResult check_star_shaped(const IndexSpec& index, const RandomVariable& X,
                                 std::span<const double> lambdas);
PropertyResult check_zero_is_infinite(const IndexSpec& index, const SpacePtr& space);
/// alpha(c) == 0 for the constant c < 0.
PropertyResult check_weak_expectation(const IndexSpec& index, const SpacePtr& space, double c);
/// X must live on an equal-weight space; values compared exactly.
PropertyResult check_law_invariant(const IndexSpec& index, const RandomVariable& X,
                                   std::span<const std::size_t> permutation);
PropertyResult check_scale_invariant(const IndexSpec& index, const RandomVariable& X,
                                     std::span<const double> lambdas);

/// Counterexample to quasi-concavity: alpha(mix) < min(alpha(X), alpha(Y)).
struct QuasiConcavityViolation {
  std::vector<double> x;
  std::vector<double> y;
  double lambda = 0.5;
  ExtendedAcceptability alpha_x = ExtendedAcceptability::exact(0.0);
  ExtendedAcceptability alpha_y = ExtendedAcceptability::exact(0.0);
  ExtendedAcceptability alpha_mix = ExtendedAcceptability::exact(0.0);
};

std::optional<QuasiConcavityViolation> find_quasi_concavity_violation(
    const IndexSpec& index, const RandomVariable& X, const RandomVariable& Y,
    std::span<const double> lambdas);

// Risk-measure predicates.

/// rho(X + c) = rho(X) - c.
PropertyResult check_cash_additive(const RiskFunctional& rho, const RandomVariable& X, double c,
                                   double tol = 1e-10);
/// rho(lambda X) >= lambda rho(X) for lambda >= 1.
PropertyResult check_star_shaped_risk(const RiskFunctional& rho, const RandomVariable& X,
                                      std::span<const double> lambdas, double tol = 1e-10);
/// True when rho(mix) > lambda rho(X) + (1 - lambda) rho(Y) beyond tol.
bool violates_convexity(const RiskFunctional& rho, const RandomVariable& X,
                        const RandomVariable& Y, double lambda, double tol = 1e-10);
/// x -> rho_x(X) nondecreasing on the grid.
PropertyResult check_family_monotone(const MonotoneRiskFamily& family, const RandomVariable& X,
                                     std::span<const double> xs, double tol = 1e-9);

}  // namespace starshape
