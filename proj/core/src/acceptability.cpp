#include "starshape/acceptability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "starshape/distribution.hpp"
#include "starshape/risk_measures.hpp"

namespace starshape {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string compact_number(double v, int precision = 12) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  std::string s = os.str();
  // 1e+06 -> 1e6
  const auto e = s.find("e+");
  if (e != std::string::npos) {
    std::string exponent = s.substr(e + 2);
    exponent.erase(0, std::min(exponent.find_first_not_of('0'), exponent.size() - 1));
    s = s.substr(0, e) + "e" + exponent;
  }
  return s;
}

double value_scale(const RandomVariable& X) {
  return 1.0 + std::max(std::abs(X.min()), std::abs(X.max()));
}

// ---- monotone reward-deviation search ------------------------------------

struct RdrProblem {
  const RiskFunctional& mu;
  const DeviationFunctional& D;
  const RandomVariable& X;
};

std::vector<double> distinct_values(const RandomVariable& X) {
  std::vector<double> v(X.values().begin(), X.values().end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Maximizes along Y_c = min(X, c) and returns the best objective together
// with the best cap. `value` maps Y to the objective (higher is better) and
// may return -inf for infeasible Y.
template <class Objective>
std::pair<double, double> search_truncations(const RandomVariable& X, const Objective& value,
                                             int restarts) {
  const auto points = distinct_values(X);
  double best = -kInf;
  double best_c = points.back();
  auto probe = [&](double c) {
    const double v = value(pointwise_min(X, c));
    if (v > best) {
      best = v;
      best_c = c;
    }
    return v;
  };
  for (double b : points) probe(b);

  const double lo = points.front();
  const double hi = points.back();
  if (restarts <= 0 || hi <= lo) return {best, best_c};
  constexpr double kInvPhi = 0.6180339887498949;
  const double width = (hi - lo) / restarts;
  for (int r = 0; r < restarts; ++r) {
    double a = lo + r * width;
    double b = (r + 1 == restarts) ? hi : a + width;
    double c1 = b - kInvPhi * (b - a);
    double c2 = a + kInvPhi * (b - a);
    double f1 = probe(c1);
    double f2 = probe(c2);
    for (int it = 0; it < 40 && (b - a) > 1e-12 * (1.0 + std::abs(hi)); ++it) {
      if (f1 >= f2) {
        b = c2;
        c2 = c1;
        f2 = f1;
        c1 = b - kInvPhi * (b - a);
        f1 = probe(c1);
      } else {
        a = c1;
        c1 = c2;
        f1 = f2;
        c2 = a + kInvPhi * (b - a);
        f2 = probe(c2);
      }
    }
  }
  return {best, best_c};
}

// Lowering Y by a small amount on its lowest outcomes keeps mu near mu(Y)
// while D leaves zero; with mu(Y) > 0 the ratio is then unbounded.
bool lowering_unbounded(const RdrProblem& P, const RandomVariable& Y) {
  const std::size_t n = Y.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return Y[a] < Y[b]; });
  const double eps = 1e-7 * value_scale(P.X);
  std::vector<double> v(Y.values().begin(), Y.values().end());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    v[order[k]] -= eps;
    const auto lowered = Y.with_values(v);
    if (P.D(lowered) > 0.0 && P.mu(lowered) > 0.0) return true;
  }
  return false;
}

// The ratio is unbounded near some Y <= X with D(Y) = 0 and mu(Y) > 0 that
// is a limit of D > 0 points: either truncations just above Y_b, or small
// lowerings of Y_b.
bool truncation_ratio_unbounded(const RdrProblem& P) {
  const auto points = distinct_values(P.X);
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto Yb = pointwise_min(P.X, points[k]);
    if (P.D(Yb) != 0.0 || !(P.mu(Yb) > 0.0)) continue;
    if (k + 1 < points.size()) {
      const auto Ym = pointwise_min(P.X, 0.5 * (points[k] + points[k + 1]));
      if (P.D(Ym) > 0.0) return true;
    }
    if (lowering_unbounded(P, Yb)) return true;
  }
  return false;
}

// Coordinate-wise grid search over Y <= X, keeping each Y_i within
// [min X - span, X_i], followed by shrinking-window refinements.
template <class Objective>
double coordinate_search(const RandomVariable& X, std::vector<double> y, const Objective& value,
                         const RdrSearchOptions& options) {
  const std::size_t n = X.size();
  const double span = std::max(X.max() - X.min(), 1e-6 * value_scale(X));
  const double floor = X.min() - span;
  const int G = std::max(options.grid_points, 3);
  double best = value(X.with_values(y));

  std::vector<double> half_width(n);
  for (std::size_t i = 0; i < n; ++i) half_width[i] = X[i] - floor;

  for (int stage = 0; stage <= options.refinements; ++stage) {
    for (int sweep = 0; sweep < 25; ++sweep) {
      bool improved = false;
      for (std::size_t i = 0; i < n; ++i) {
        const double a = stage == 0 ? floor : std::max(floor, y[i] - half_width[i]);
        const double b = stage == 0 ? X[i] : std::min(X[i], y[i] + half_width[i]);
        if (!(b > a)) continue;
        const double keep = y[i];
        double best_here = keep;
        for (int g = 0; g < G; ++g) {
          y[i] = (g + 1 == G) ? b : a + (b - a) * g / (G - 1);
          const double v = value(X.with_values(y));
          if (v > best + 1e-15 * std::abs(best)) {
            best = v;
            best_here = y[i];
            improved = true;
          }
        }
        y[i] = best_here;
      }
      if (!improved) break;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double a = stage == 0 ? floor : std::max(floor, y[i] - half_width[i]);
      const double b = stage == 0 ? X[i] : std::min(X[i], y[i] + half_width[i]);
      half_width[i] = 2.0 * std::max(b - a, 0.0) / (G - 1);
    }
  }
  return best;
}

template <class Objective>
double search_sup(const RandomVariable& X, const Objective& value, const RdrSearchOptions& options) {
  if (options.method == RdrMethod::exact_small && X.size() > kExactSmallMaxOutcomes) {
    throw std::invalid_argument("rdr exact_small: at most 6 outcomes supported");
  }
  const auto [best, best_c] = search_truncations(X, value, options.restarts);
  if (options.method == RdrMethod::truncation_heuristic) return best;
  const auto start = pointwise_min(X, best_c);
  const double from_trunc = coordinate_search(X, {start.values().begin(), start.values().end()},
                                              value, options);
  const double from_x = coordinate_search(X, {X.values().begin(), X.values().end()}, value, options);
  return std::max({best, from_trunc, from_x});
}

}  // namespace

// ---- ExtendedAcceptability ------------------------------------------------

ExtendedAcceptability ExtendedAcceptability::exact(double value) {
  if (!(value >= 0.0)) throw std::invalid_argument("acceptability value must be nonnegative");
  return {value, Mode::exact, 0.0};
}
ExtendedAcceptability ExtendedAcceptability::infinity() { return {kInf, Mode::exact, 0.0}; }
ExtendedAcceptability ExtendedAcceptability::capped(double x_max) {
  return {x_max, Mode::capped, 0.0};
}
ExtendedAcceptability ExtendedAcceptability::bisected(double value, double tol) {
  return {value, Mode::bisected, tol};
}
ExtendedAcceptability ExtendedAcceptability::lower_bound(double value) {
  if (!(value >= 0.0)) throw std::invalid_argument("acceptability value must be nonnegative");
  return {value, Mode::lower_bound, 0.0};
}

bool ExtendedAcceptability::is_infinite() const noexcept {
  return mode_ == Mode::capped || std::isinf(value_);
}

double ExtendedAcceptability::extended() const noexcept {
  return mode_ == Mode::capped ? kInf : value_;
}

std::string ExtendedAcceptability::to_string() const {
  if (mode_ == Mode::capped) return "≥ " + compact_number(value_, 6) + " (∞)";
  if (std::isinf(value_)) return "inf";
  std::string s = compact_number(value_);
  if (mode_ == Mode::lower_bound) s = "≥ " + s;
  return s;
}

// ---- generic solver --------------------------------------------------------

ExtendedAcceptability index_from_family(const MonotoneRiskFamily& family, const RandomVariable& X,
                                        double x_max, double tol) {
  if (!(x_max > kFamilyXMin) || !(tol > 0.0)) {
    throw std::invalid_argument("index_from_family: need x_max > 1e-9 and tol > 0");
  }
  double lo = kFamilyXMin;
  double r_lo = family(lo, X);
  if (r_lo > 0.0) return ExtendedAcceptability::exact(0.0);
  double hi = x_max;
  double r_hi = family(hi, X);
  if (r_hi <= 0.0) return ExtendedAcceptability::capped(x_max);

  while (hi / lo - 1.0 > tol) {
    const double mid = std::sqrt(lo * hi);
    const double r = family(mid, X);
    const double slack = 1e-9 * (1.0 + std::abs(r_lo) + std::abs(r_hi));
    if (r < r_lo - slack || r > r_hi + slack) {
      throw std::runtime_error("index_from_family: family '" + family.name +
                               "' is not monotone in x");
    }
    if (r <= 0.0) {
      lo = mid;
      r_lo = r;
    } else {
      hi = mid;
      r_hi = r;
    }
  }
  return ExtendedAcceptability::bisected(lo, tol);
}

// ---- closed forms ----------------------------------------------------------

namespace {

ExtendedAcceptability alpha_var_of(const Distribution& law) {
  const double q = law.prob_below(0.0);
  if (q <= 0.0) return ExtendedAcceptability::infinity();
  return ExtendedAcceptability::exact(std::max(0.0, (1.0 - q) / q));
}

ExtendedAcceptability alpha_es_of(const Distribution& law) {
  if (law.min() >= 0.0) return ExtendedAcceptability::infinity();
  if (law.mean() < 0.0) return ExtendedAcceptability::exact(0.0);
  const auto atoms = law.atoms();
  const auto cum = law.cumulative();
  // H(p) is linear on each slab; find the slab where it climbs back to 0.
  double H = 0.0;
  double p_star = 1.0;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const double left = k == 0 ? 0.0 : cum[k - 1];
    const double next = H + (cum[k] - left) * atoms[k];
    if (atoms[k] > 0.0 && next >= 0.0) {
      p_star = std::min(1.0, left - H / atoms[k]);
      break;
    }
    H = next;
  }
  return ExtendedAcceptability::exact(std::max(0.0, 1.0 / p_star - 1.0));
}

ExtendedAcceptability glr_of(const Distribution& law, GlrMode mode) {
  const double gain = law.upper_partial_moment(0.0);
  const double loss = law.lower_partial_moment(0.0);
  if (loss <= 0.0) return ExtendedAcceptability::infinity();
  if (mode == GlrMode::star) return ExtendedAcceptability::exact(gain / loss);
  const double mean = gain - loss;
  return ExtendedAcceptability::exact(mean > 0.0 ? mean / loss : 0.0);
}

}  // namespace

ExtendedAcceptability alpha_var(const RandomVariable& X) { return alpha_var_of(Distribution(X)); }
ExtendedAcceptability alpha_var(const RandomVariable& X, const Scenario& scenario) {
  return alpha_var_of(Distribution(X, scenario));
}

ExtendedAcceptability alpha_es(const RandomVariable& X) { return alpha_es_of(Distribution(X)); }
ExtendedAcceptability alpha_es(const RandomVariable& X, const Scenario& scenario) {
  return alpha_es_of(Distribution(X, scenario));
}

ExtendedAcceptability glr(const RandomVariable& X, GlrMode mode) {
  return glr_of(Distribution(X), mode);
}
ExtendedAcceptability glr(const RandomVariable& X, GlrMode mode, const Scenario& scenario) {
  return glr_of(Distribution(X, scenario), mode);
}

// ---- RAROC -----------------------------------------------------------------

ExtendedAcceptability raroc(const RiskFunctional& mu, const RiskFunctional& rho,
                            const RandomVariable& X) {
  const double r = rho(X);
  if (r <= 0.0) return ExtendedAcceptability::infinity();
  const double m = mu(X);
  if (m <= 0.0) return ExtendedAcceptability::exact(0.0);
  return ExtendedAcceptability::exact(m / r);
}

double raroc_family_rho(const RiskFunctional& mu, const RiskFunctional& rho, double x,
                        const RandomVariable& X) {
  if (!(x > 0.0)) throw std::invalid_argument("raroc_family_rho: x must be positive");
  return (-mu(X) + x * rho(X)) / (1.0 + x);
}

// ---- generalized GLR -------------------------------------------------------

ExtendedAcceptability glr_generalized(const RiskFunctional& mu, const RiskFunctional& rho,
                                      const RandomVariable& X) {
  const double slack = 1e-12 * value_scale(X);
  const double den = rho(pointwise_min(X, 0.0));
  if (den < -slack) {
    throw std::invalid_argument("glr_generalized: negative denominator; '" + rho.name() +
                                "' is not monetary and normalized");
  }
  if (den <= 0.0) return ExtendedAcceptability::infinity();
  const double num = mu(positive_part(X));
  if (num < -slack) {
    throw std::invalid_argument("glr_generalized: negative numerator; '" + mu.name() +
                                "' is not monotone and normalized");
  }
  return ExtendedAcceptability::exact(std::max(0.0, num) / den);
}

double glr_family_rho(const RiskFunctional& mu, const RiskFunctional& rho, double x,
                      const RandomVariable& X) {
  if (!(x > 0.0)) throw std::invalid_argument("glr_family_rho: x must be positive");
  const double slack = 1e-12 * value_scale(X);
  auto g = [&](double y) {
    const auto shifted = affine(X, 1.0, -y);
    return mu(positive_part(shifted)) - x * rho(pointwise_min(shifted, 0.0));
  };
  double lo = X.min() - 1.0;
  double hi = X.max() + 1.0;
  if (g(lo) < -slack || g(hi) > slack) {
    throw std::invalid_argument("glr_family_rho: root not bracketed; inputs are not monetary");
  }
  // Keep g(lo) >= 0 > g(hi) (up to slack) so lo converges to the largest root.
  while (hi - lo > 1e-10 * std::max(1.0, std::abs(lo))) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) >= -slack) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return -lo;
}

// ---- reward-deviation ratios -----------------------------------------------

ExtendedAcceptability rdr_ratio(const RiskFunctional& mu, const DeviationFunctional& D,
                                const RandomVariable& X) {
  const double d = D(X);
  const double m = mu(X);
  if (d <= 0.0) {
    return m >= 0.0 ? ExtendedAcceptability::infinity() : ExtendedAcceptability::exact(0.0);
  }
  if (m <= 0.0) return ExtendedAcceptability::exact(0.0);
  return ExtendedAcceptability::exact(m / d);
}

ExtendedAcceptability rdr_monotone(const RiskFunctional& mu, const DeviationFunctional& D,
                                   const RandomVariable& X, const RdrSearchOptions& options) {
  if (options.method == RdrMethod::exact_small && X.size() > kExactSmallMaxOutcomes) {
    throw std::invalid_argument("rdr_monotone: exact_small supports at most 6 outcomes");
  }
  const double m = mu(X);
  // The zero-deviation case is read as "X constant": deviations such as the
  // interquantile range also vanish on some non-constant X, and treating
  // those as +inf would break monotonicity.
  if (X.is_constant()) {
    return m >= 0.0 ? ExtendedAcceptability::infinity() : ExtendedAcceptability::exact(0.0);
  }
  if (m <= 0.0) return ExtendedAcceptability::exact(0.0);

  const RdrProblem problem{mu, D, X};
  if (truncation_ratio_unbounded(problem)) return ExtendedAcceptability::infinity();
  auto ratio = [&](const RandomVariable& Y) {
    const double dy = D(Y);
    return dy > 0.0 ? mu(Y) / dy : -kInf;
  };
  const double d = D(X);
  const double best = std::max(d > 0.0 ? m / d : -kInf, search_sup(X, ratio, options));
  // No Y <= X with D(Y) > 0 at all: the search space is empty and X sits in
  // the zero-deviation case with mu(X) > 0.
  if (best == -kInf) return ExtendedAcceptability::infinity();
  return ExtendedAcceptability::lower_bound(std::max(0.0, best));
}

double rdr_family_rho(const RiskFunctional& mu, const DeviationFunctional& D, double x,
                      const RandomVariable& X, const RdrSearchOptions& options) {
  if (!(x > 0.0)) throw std::invalid_argument("rdr_family_rho: x must be positive");
  if (options.method == RdrMethod::exact_small && X.size() > kExactSmallMaxOutcomes) {
    throw std::invalid_argument("rdr_family_rho: exact_small supports at most 6 outcomes");
  }
  // With a single outcome every Y is constant and the feasible set is empty.
  if (X.size() == 1) return kInf;
  // Points with D(Y) = 0 enter as limits of nearby D > 0 points.
  auto negated = [&](const RandomVariable& Y) { return mu(Y) - x * D(Y); };
  return -std::max(negated(X), search_sup(X, negated, options));
}

// ---- families --------------------------------------------------------------

namespace families {

MonotoneRiskFamily var_acceptance() {
  return {"VaR^{1/(1+x)} (acceptance sets)", [](double x, const RandomVariable& X) {
            return -Distribution(X).upper_quantile(1.0 / (1.0 + x));
          }};
}

MonotoneRiskFamily expected_shortfall() {
  return {"ES^{1/(1+x)}",
          [](double x, const RandomVariable& X) { return es(X, 1.0 / (1.0 + x)); }};
}

MonotoneRiskFamily expectile_var() {
  return {"EVaR^{1/(1+x)}",
          [](double x, const RandomVariable& X) { return evar(X, 1.0 / (1.0 + x)); }};
}

MonotoneRiskFamily expectile_var_coherent() {
  return {"EVaR^{1/(2+x)}",
          [](double x, const RandomVariable& X) { return evar(X, 1.0 / (2.0 + x)); }};
}

MonotoneRiskFamily raroc(const RiskFunctional& mu, const RiskFunctional& rho) {
  return {"raroc(" + mu.name() + ", " + rho.name() + ")",
          [mu, rho](double x, const RandomVariable& X) { return raroc_family_rho(mu, rho, x, X); }};
}

MonotoneRiskFamily glr(const RiskFunctional& mu, const RiskFunctional& rho) {
  return {"glr(" + mu.name() + ", " + rho.name() + ")",
          [mu, rho](double x, const RandomVariable& X) { return glr_family_rho(mu, rho, x, X); }};
}

MonotoneRiskFamily rdr(const RiskFunctional& mu, const DeviationFunctional& D,
                       const RdrSearchOptions& options) {
  return {"rdr(" + mu.name() + ", " + D.name() + ")",
          [mu, D, options](double x, const RandomVariable& X) {
            return rdr_family_rho(mu, D, x, X, options);
          }};
}

}  // namespace families

}  // namespace starshape
