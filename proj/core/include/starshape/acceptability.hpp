#pragma once

#include <functional>
#include <string>

#include "starshape/functionals.hpp"
#include "starshape/random_variable.hpp"

namespace starshape {

/// Acceptability level in [0, +inf] together with how it was obtained.
///
/// `capped` is the finite-machine encoding of a family-solver infinity: the
/// family was still acceptable at x_max, and value() returns that cap.
/// `lower_bound` marks search results that are attained but may not be the
/// supremum.
class ExtendedAcceptability {
 public:
  enum class Mode { exact, capped, bisected, lower_bound };

  static ExtendedAcceptability exact(double value);
  static ExtendedAcceptability infinity();
  static ExtendedAcceptability capped(double x_max);
  static ExtendedAcceptability bisected(double value, double tol);
  static ExtendedAcceptability lower_bound(double value);

  double value() const noexcept { return value_; }
  Mode mode() const noexcept { return mode_; }
  double tolerance() const noexcept { return tol_; }
  /// True for an exact infinity and for a capped value.
  bool is_infinite() const noexcept;
  /// value() with capped results mapped to +inf; the ordering key used by
  /// property checks and summary statistics.
  double extended() const noexcept;

  std::string to_string() const;

  friend bool operator==(const ExtendedAcceptability&, const ExtendedAcceptability&) = default;

 private:
  ExtendedAcceptability(double value, Mode mode, double tol) : value_(value), mode_(mode), tol_(tol) {}

  double value_ = 0.0;
  Mode mode_ = Mode::exact;
  double tol_ = 0.0;
};

/// x -> rho_x(X), contractually nondecreasing in x, each rho_x monetary.
struct MonotoneRiskFamily {
  std::string name;
  std::function<double(double x, const RandomVariable& X)> rho;

  double operator()(double x, const RandomVariable& X) const { return rho(x, X); }
};

inline constexpr double kDefaultXMax = 1e6;
inline constexpr double kDefaultFamilyTol = 1e-9;
inline constexpr double kFamilyXMin = 1e-9;

/// sup{x > 0 : rho_x(X) <= 0} with sup(empty) = 0.
///
/// Returns exact 0 when rho at 1e-9 is already positive and capped(x_max) when
/// rho at x_max is still nonpositive. Otherwise bisects geometrically to
/// relative width `tol` and returns the lower endpoint, so the returned level
/// is attained. A family value leaving the bracket [rho(lo), rho(hi)] during
/// bisection raises std::runtime_error.
ExtendedAcceptability index_from_family(const MonotoneRiskFamily& family, const RandomVariable& X,
                                        double x_max = kDefaultXMax, double tol = kDefaultFamilyTol);

/// VaR-based index through its acceptance sets P(X < 0) <= 1/(1+x):
/// (1 - q)/q with q = P(X < 0), +inf when q = 0.
ExtendedAcceptability alpha_var(const RandomVariable& X);
ExtendedAcceptability alpha_var(const RandomVariable& X, const Scenario& scenario);

/// ES-based index, 1/p* - 1 where p* is the first zero of the integrated
/// quantile function. +inf when X >= 0, 0 when E[X] < 0.
ExtendedAcceptability alpha_es(const RandomVariable& X);
ExtendedAcceptability alpha_es(const RandomVariable& X, const Scenario& scenario);

/// Reward over risk with the three-case convention: mu/rho when both are
/// positive, 0 when mu <= 0 < rho, +inf when rho <= 0.
ExtendedAcceptability raroc(const RiskFunctional& mu, const RiskFunctional& rho,
                            const RandomVariable& X);
/// (-mu(X) + x rho(X)) / (1 + x).
double raroc_family_rho(const RiskFunctional& mu, const RiskFunctional& rho, double x,
                        const RandomVariable& X);

enum class GlrMode {
  /// E[X] / E[X^-]; quasi-concave.
  coherent,
  /// E[X^+] / E[X^-]; star-shaped only.
  star,
};

ExtendedAcceptability glr(const RandomVariable& X, GlrMode mode);
ExtendedAcceptability glr(const RandomVariable& X, GlrMode mode, const Scenario& scenario);

/// mu(X^+) / rho(-X^-), +inf when the denominator vanishes. A negative
/// numerator or denominator means mu or rho is not monetary and normalized;
/// that raises std::invalid_argument.
ExtendedAcceptability glr_generalized(const RiskFunctional& mu, const RiskFunctional& rho,
                                      const RandomVariable& X);
/// -sup{y : mu((X - y)^+) = x rho(-(X - y)^-)}, by bisection to 1e-10 in y.
double glr_family_rho(const RiskFunctional& mu, const RiskFunctional& rho, double x,
                      const RandomVariable& X);

/// Plain mu(X)/D(X) with the reward-deviation case layout: 0 when
/// (mu <= 0 and D > 0) or (mu < 0 and D = 0), +inf when mu >= 0 and D = 0.
ExtendedAcceptability rdr_ratio(const RiskFunctional& mu, const DeviationFunctional& D,
                                const RandomVariable& X);

enum class RdrMethod {
  /// Coordinate-grid search over Y <= X, spaces with at most 6 outcomes.
  exact_small,
  /// Search over truncations Y_c = min(X, c).
  truncation_heuristic,
};

struct RdrSearchOptions {
  RdrMethod method = RdrMethod::truncation_heuristic;
  int restarts = 64;
  int grid_points = 200;
  int refinements = 3;
};

inline constexpr std::size_t kExactSmallMaxOutcomes = 6;

/// Monotone reward-deviation ratio sup_{Y <= X, D(Y) > 0} mu(Y)/D(Y): +inf
/// for constants c >= 0, 0 for constants c < 0 and whenever mu(X) <= 0.
/// Search results come back as lower_bound values; +inf is reported when
/// some Y <= X with D(Y) = 0 and mu(Y) > 0 is approached from inside D > 0.
ExtendedAcceptability rdr_monotone(const RiskFunctional& mu, const DeviationFunctional& D,
                                   const RandomVariable& X, const RdrSearchOptions& options = {});
/// inf_{Y <= X, D(Y) > 0} {-mu(Y) + x D(Y)} with the same search machinery.
double rdr_family_rho(const RiskFunctional& mu, const DeviationFunctional& D, double x,
                      const RandomVariable& X, const RdrSearchOptions& options = {});

namespace families {

/// -F^{-1,+}(1/(1+x)): the VaR family in acceptance-set form.
MonotoneRiskFamily var_acceptance();
/// ES^{1/(1+x)}.
MonotoneRiskFamily expected_shortfall();
/// EVaR^{1/(1+x)}, representing the star gain-loss ratio.
MonotoneRiskFamily expectile_var();
/// EVaR^{1/(2+x)}, representing the coherent gain-loss ratio.
MonotoneRiskFamily expectile_var_coherent();
MonotoneRiskFamily raroc(const RiskFunctional& mu, const RiskFunctional& rho);
MonotoneRiskFamily glr(const RiskFunctional& mu, const RiskFunctional& rho);
MonotoneRiskFamily rdr(const RiskFunctional& mu, const DeviationFunctional& D,
                       const RdrSearchOptions& options = {});

}  // namespace families

}  // namespace starshape
