#include "starshape/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace starshape {
namespace {

double slack(double reference, double tol) { return tol * std::max(1.0, std::abs(reference)); }

std::string describe(const ExtendedAcceptability& a) { return a.to_string(); }

}  // namespace

bool at_least(const ExtendedAcceptability& a, const ExtendedAcceptability& b, double tol) {
  const double va = a.extended();
  const double vb = b.extended();
  if (std::isinf(va)) return true;
  if (std::isinf(vb)) return false;
  return va >= vb - slack(vb, tol);
}

bool same_value(const ExtendedAcceptability& a, const ExtendedAcceptability& b, double tol) {
  const double va = a.extended();
  const double vb = b.extended();
  if (std::isinf(va) || std::isinf(vb)) return std::isinf(va) && std::isinf(vb);
  return std::abs(va - vb) <= slack(std::max(std::abs(va), std::abs(vb)), tol);
}

PropertyResult check_monotone(const IndexSpec& index, const RandomVariable& X,
                              const RandomVariable& Y) {
  const auto ax = index(X);
  const auto ay = index(Y);
  if (at_least(ax, ay)) return std::nullopt;
  return "alpha(X)=" + describe(ax) + " < alpha(Y)=" + describe(ay) + " with X >= Y";
}

PropertyResult check_star_shaped(const IndexSpec& index, const RandomVariable& X,
                                 std::span<const double> lambdas) {
  const auto base = index(X);
  std::optional<ExtendedAcceptability> previous;
  double previous_lambda = 0.0;
  for (double lambda : lambdas) {
    const auto a = index(affine(X, lambda, 0.0));
    if (lambda >= 1.0 && !at_least(base, a)) {
      return "alpha(" + std::to_string(lambda) + " X)=" + describe(a) + " > alpha(X)=" +
             describe(base);
    }
    if (previous && !at_least(*previous, a)) {
      return "lambda -> alpha(lambda X) increases between " + std::to_string(previous_lambda) +
             " and " + std::to_string(lambda);
    }
    previous = a;
    previous_lambda = lambda;
  }
  return std::nullopt;
}

PropertyResult check_zero_is_infinite(const IndexSpec& index, const SpacePtr& space) {
  const auto a = index(RandomVariable(space, std::vector<double>(space->size(), 0.0)));
  if (a.is_infinite()) return std::nullopt;
  return "alpha(0)=" + describe(a);
}

PropertyResult check_weak_expectation(const IndexSpec& index, const SpacePtr& space, double c) {
  const auto a = index(RandomVariable(space, std::vector<double>(space->size(), c)));
  if (a.value() == 0.0 && !a.is_infinite()) return std::nullopt;
  return "alpha(" + std::to_string(c) + ")=" + describe(a);
}

PropertyResult check_law_invariant(const IndexSpec& index, const RandomVariable& X,
                                   std::span<const std::size_t> permutation) {
  std::vector<double> permuted(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) permuted[i] = X[permutation[i]];
  const auto a = index(X);
  const auto b = index(X.with_values(std::move(permuted)));
  if (a.value() == b.value() && a.mode() == b.mode()) return std::nullopt;
  return "permutation changed alpha from " + describe(a) + " to " + describe(b);
}

PropertyResult check_scale_invariant(const IndexSpec& index, const RandomVariable& X,
                                     std::span<const double> lambdas) {
  const auto base = index(X);
  for (double lambda : lambdas) {
    const auto a = index(affine(X, lambda, 0.0));
    if (!same_value(a, base)) {
      return "alpha(" + std::to_string(lambda) + " X)=" + describe(a) + " != alpha(X)=" +
             describe(base);
    }
  }
  return std::nullopt;
}

std::optional<QuasiConcavityViolation> find_quasi_concavity_violation(
    const IndexSpec& index, const RandomVariable& X, const RandomVariable& Y,
    std::span<const double> lambdas) {
  const auto ax = index(X);
  const auto ay = index(Y);
  const auto& lower = ax.extended() <= ay.extended() ? ax : ay;
  for (double lambda : lambdas) {
    const auto am = index(mix(X, Y, lambda));
    if (!at_least(am, lower)) {
      return QuasiConcavityViolation{{X.values().begin(), X.values().end()},
                                     {Y.values().begin(), Y.values().end()},
                                     lambda,
                                     ax,
                                     ay,
                                     am};
    }
  }
  return std::nullopt;
}

PropertyResult check_cash_additive(const RiskFunctional& rho, const RandomVariable& X, double c,
                                   double tol) {
  const double base = rho(X);
  const double shifted = rho(affine(X, 1.0, c));
  if (std::abs(shifted - (base - c)) <= tol * (1.0 + std::abs(base) + std::abs(c))) {
    return std::nullopt;
  }
  std::ostringstream os;
  os << rho.name() << "(X+" << c << ")=" << shifted << " but " << rho.name() << "(X)-c="
     << base - c;
  return os.str();
}

PropertyResult check_star_shaped_risk(const RiskFunctional& rho, const RandomVariable& X,
                                      std::span<const double> lambdas, double tol) {
  const double base = rho(X);
  for (double lambda : lambdas) {
    if (lambda < 1.0) continue;
    const double scaled = rho(affine(X, lambda, 0.0));
    if (scaled < lambda * base - tol * (1.0 + std::abs(lambda * base))) {
      std::ostringstream os;
      os << rho.name() << "(" << lambda << " X)=" << scaled << " < " << lambda * base;
      return os.str();
    }
  }
  return std::nullopt;
}

bool violates_convexity(const RiskFunctional& rho, const RandomVariable& X,
                        const RandomVariable& Y, double lambda, double tol) {
  const double lhs = rho(mix(X, Y, lambda));
  const double rhs = lambda * rho(X) + (1.0 - lambda) * rho(Y);
  return lhs > rhs + tol * (1.0 + std::abs(rhs));
}

PropertyResult check_family_monotone(const MonotoneRiskFamily& family, const RandomVariable& X,
                                     std::span<const double> xs, double tol) {
  double previous = -INFINITY;
  double previous_x = 0.0;
  for (double x : xs) {
    const double r = family(x, X);
    if (r < previous - tol * (1.0 + std::abs(previous))) {
      std::ostringstream os;
      os << family.name << ": rho_" << x << "=" << r << " < rho_" << previous_x << "=" << previous;
      return os.str();
    }
    previous = r;
    previous_x = x;
  }
  return std::nullopt;
}

}  // namespace starshape
