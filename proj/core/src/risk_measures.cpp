#include "starshape/risk_measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace starshape {
namespace {

void check_level(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": level outside [0,1]");
  }
}

double absolute_mean(const Distribution& law) {
  double total = 0.0;
  for (std::size_t k = 0; k < law.size(); ++k) total += law.probabilities()[k] * std::abs(law.atoms()[k]);
  return total;
}

}  // namespace

double var(const Distribution& law, double p) {
  check_level(p, "var");
  return -law.left_quantile(p);
}

double var(const RandomVariable& X, double p) { return var(Distribution(X), p); }

double var(const RandomVariable& X, double p, const Scenario& scenario) {
  return var(Distribution(X, scenario), p);
}

double es(const Distribution& law, double p) {
  check_level(p, "es");
  if (p == 0.0) return -law.min();
  return -law.integrated_quantile(p) / p;
}

double es(const RandomVariable& X, double p) { return es(Distribution(X), p); }

double es(const RandomVariable& X, double p, const Scenario& scenario) {
  return es(Distribution(X, scenario), p);
}

double expectile_residual(const Distribution& law, double p, double y) {
  const double r = p * law.upper_partial_moment(y) - (1.0 - p) * law.lower_partial_moment(y);
  return r / (1.0 + absolute_mean(law));
}

double expectile(const Distribution& law, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("expectile: level must lie in (0,1)");
  if (law.size() == 1) return law.min();

  constexpr double kResidualTol = 1e-12;
  const double scale = 1.0 + absolute_mean(law);
  auto residual = [&](double y) {
    return (p * law.upper_partial_moment(y) - (1.0 - p) * law.lower_partial_moment(y)) / scale;
  };

  // The residual is continuous, strictly decreasing and piecewise linear in y.
  double lo = law.min(), hi = law.max();
  double f_lo = residual(lo), f_hi = residual(hi);
  if (std::abs(f_lo) < kResidualTol) return lo;
  if (std::abs(f_hi) < kResidualTol) return hi;

  double best = lo, best_abs = std::abs(f_lo);
  int side = 0;  // Illinois bookkeeping
  for (int iter = 0; iter < 400; ++iter) {
    double y = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
    if (!(y > lo && y < hi)) y = 0.5 * (lo + hi);
    const double f = residual(y);
    if (std::abs(f) < best_abs) {
      best = y;
      best_abs = std::abs(f);
    }
    if (std::abs(f) < kResidualTol) return y;
    if (f > 0.0) {
      lo = y;
      f_lo = f;
      if (side == -1) f_hi *= 0.5;
      side = -1;
    } else {
      hi = y;
      f_hi = f;
      if (side == 1) f_lo *= 0.5;
      side = 1;
    }
    if (hi - lo < 1e-14 * (1.0 + std::abs(y))) break;
  }
  return best;
}

double expectile(const RandomVariable& X, double p) { return expectile(Distribution(X), p); }

double expectile(const RandomVariable& X, double p, const Scenario& scenario) {
  return expectile(Distribution(X, scenario), p);
}

double evar(const Distribution& law, double p) { return -expectile(law, p); }
double evar(const RandomVariable& X, double p) { return -expectile(X, p); }
double evar(const RandomVariable& X, double p, const Scenario& scenario) {
  return -expectile(X, p, scenario);
}

Distortion::Distortion(Kind kind, double level, std::vector<double> xs, std::vector<double> ys)
    : kind_(kind), level_(level), xs_(std::move(xs)), ys_(std::move(ys)) {}

Distortion Distortion::identity() { return Distortion(Kind::identity, 0.0, {}, {}); }

Distortion Distortion::step(double level) {
  check_level(level, "Distortion::step");
  return Distortion(Kind::step, level, {}, {});
}

Distortion Distortion::es_clamp(double level) {
  if (!(level > 0.0 && level <= 1.0)) {
    throw std::invalid_argument("Distortion::es_clamp: level must lie in (0,1]");
  }
  return Distortion(Kind::es_clamp, level, {}, {});
}

Distortion Distortion::piecewise_linear(std::vector<double> xs, std::vector<double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("Distortion: need at least two matching knots");
  }
  if (xs.front() != 0.0 || xs.back() != 1.0 || ys.front() != 0.0 || ys.back() != 1.0) {
    throw std::invalid_argument("Distortion: knots must run from (0,0) to (1,1)");
  }
  for (std::size_t k = 1; k < xs.size(); ++k) {
    if (!(xs[k] > xs[k - 1])) throw std::invalid_argument("Distortion: knot abscissae must increase");
    if (ys[k] < ys[k - 1]) throw std::invalid_argument("Distortion: g must be nondecreasing");
  }
  return Distortion(Kind::piecewise_linear, 0.0, std::move(xs), std::move(ys));
}

double Distortion::operator()(double y) const {
  switch (kind_) {
    case Kind::identity:
      return y;
    case Kind::step:
      return (y > 0.0 && y >= level_ - kCumulativeSlack) ? 1.0 : 0.0;
    case Kind::es_clamp:
      return y >= level_ ? 1.0 : y / level_;
    case Kind::piecewise_linear: {
      if (y <= 0.0) return 0.0;
      if (y >= 1.0) return 1.0;
      auto it = std::upper_bound(xs_.begin(), xs_.end(), y);
      const std::size_t k = static_cast<std::size_t>(it - xs_.begin());
      const double t = (y - xs_[k - 1]) / (xs_[k] - xs_[k - 1]);
      return ys_[k - 1] + t * (ys_[k] - ys_[k - 1]);
    }
  }
  return y;
}

bool Distortion::is_concave() const noexcept {
  switch (kind_) {
    case Kind::identity:
    case Kind::es_clamp:
      return true;
    case Kind::step:
      return level_ == 0.0;
    case Kind::piecewise_linear: {
      double prev = INFINITY;
      for (std::size_t k = 1; k < xs_.size(); ++k) {
        const double slope = (ys_[k] - ys_[k - 1]) / (xs_[k] - xs_[k - 1]);
        if (slope > prev + 1e-12) return false;
        prev = slope;
      }
      return true;
    }
  }
  return false;
}

double choquet(const Distribution& law, const Distortion& g) {
  // Ascending atoms are descending losses; S for atom k is F(atom_k).
  double total = 0.0;
  double g_prev = 0.0;
  for (std::size_t k = 0; k < law.size(); ++k) {
    const double g_here = g(law.cumulative()[k]);
    total += -law.atoms()[k] * (g_here - g_prev);
    g_prev = g_here;
  }
  return total;
}

double choquet(const RandomVariable& X, const Distortion& g) { return choquet(Distribution(X), g); }

double choquet(const RandomVariable& X, const Distortion& g, const Scenario& scenario) {
  return choquet(Distribution(X, scenario), g);
}

LossThreshold::LossThreshold(std::vector<double> breakpoints, std::vector<double> levels)
    : breakpoints_(std::move(breakpoints)), levels_(std::move(levels)) {
  if (breakpoints_.empty() || breakpoints_.size() != levels_.size()) {
    throw std::invalid_argument("LossThreshold: need matching, nonempty breakpoints and levels");
  }
  if (breakpoints_.front() != 0.0) {
    throw std::invalid_argument("LossThreshold: first breakpoint must be 0");
  }
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    if (!(levels_[j] >= 0.0 && levels_[j] <= 1.0)) {
      throw std::invalid_argument("LossThreshold: levels must lie in [0,1]");
    }
    if (j > 0) {
      if (!(breakpoints_[j] > breakpoints_[j - 1]) || !std::isfinite(breakpoints_[j])) {
        throw std::invalid_argument("LossThreshold: breakpoints must increase");
      }
      if (levels_[j] < levels_[j - 1]) {
        throw std::invalid_argument("LossThreshold: theta must be nondecreasing");
      }
    }
  }
}

LossThreshold LossThreshold::constant(double level) { return LossThreshold({0.0}, {level}); }

double LossThreshold::operator()(double t) const {
  if (t < 0.0) throw std::invalid_argument("LossThreshold: t must be nonnegative");
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return levels_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

double lvar(const Distribution& law, const LossThreshold& theta) {
  const double at_zero = var(law, theta.levels().front());
  // Beyond t_max no level can beat the t = 0 value since VaR^0 bounds VaR^p.
  const double t_max = std::max(0.0, var(law, 0.0) - at_zero);
  double best = at_zero;
  for (std::size_t j = 1; j < theta.breakpoints().size(); ++j) {
    const double t = theta.breakpoints()[j];
    if (t > t_max) break;
    best = std::max(best, var(law, theta.levels()[j]) - t);
  }
  return best;
}

double lvar(const RandomVariable& X, const LossThreshold& theta) {
  return lvar(Distribution(X), theta);
}

}  // namespace starshape
