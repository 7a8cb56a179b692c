#include "starshape/portfolio.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "starshape/parallel.hpp"

namespace starshape {
namespace {

constexpr double kMuFloor = 1e-10;

struct Candidate {
  double value = std::numeric_limits<double>::infinity();
  std::vector<double> weights;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.weights < b.weights;
}

void normalize(std::vector<double>& w) {
  for (auto& v : w) v = std::max(v, 0.0);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& v : w) v /= total;
}

// Pairwise-transfer pattern search: move mass between two coordinates while
// it helps, halving the step when no transfer improves.
template <class F>
Candidate pattern_search(const F& objective, std::vector<double> w, double stop_below) {
  const std::size_t n = w.size();
  double best = objective(w);
  double step = 0.25;
  while (step > 1e-9 && best > stop_below) {
    bool improved = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || w[i] <= 0.0) continue;
        const double delta = std::min(step, w[i]);
        auto trial = w;
        trial[i] -= delta;
        trial[j] += delta;
        const double v = objective(trial);
        if (v < best) {
          best = v;
          w = std::move(trial);
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return {best, std::move(w)};
}

std::vector<std::vector<double>> starting_points(std::size_t n, int restarts, std::uint64_t seed) {
  std::vector<std::vector<double>> starts;
  starts.emplace_back(n, 1.0 / n);
  for (std::size_t i = 0; i < n && starts.size() < static_cast<std::size_t>(restarts); ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    starts.push_back(std::move(e));
  }
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  while (starts.size() < static_cast<std::size_t>(std::max(restarts, 1))) {
    std::vector<double> w(n);
    for (auto& v : w) v = expo(rng);
    normalize(w);
    starts.push_back(std::move(w));
  }
  return starts;
}

// Minimizes f over the simplex from every start, in fixed batches so the
// early exit (value <= stop_below) stays deterministic.
template <class F>
Candidate minimize_on_simplex(const F& f, const std::vector<std::vector<double>>& starts,
                              double stop_below) {
  constexpr std::size_t kBatch = 8;
  Candidate best;
  for (std::size_t begin = 0; begin < starts.size(); begin += kBatch) {
    const std::size_t end = std::min(starts.size(), begin + kBatch);
    std::vector<Candidate> found(end - begin);
    parallel_for(found.size(), [&](std::size_t k) {
      found[k] = pattern_search(f, starts[begin + k], stop_below);
    });
    for (auto& c : found) {
      if (best.weights.empty() || better(c, best)) best = std::move(c);
    }
    if (best.value <= stop_below) break;
  }
  return best;
}

}  // namespace

Market::Market(std::vector<std::string> names, std::vector<RandomVariable> assets)
    : names_(std::move(names)), assets_(std::move(assets)) {
  if (assets_.empty()) throw std::invalid_argument("Market: no assets");
  if (names_.size() != assets_.size()) throw std::invalid_argument("Market: one name per asset");
  for (std::size_t i = 0; i < assets_.size(); ++i) {
    if (!assets_[i].shares_space_with(assets_.front())) {
      throw std::invalid_argument("Market: assets live on different spaces");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::equal(assets_[i].values().begin(), assets_[i].values().end(),
                     assets_[j].values().begin())) {
        warnings_.push_back("assets '" + names_[j] + "' and '" + names_[i] +
                            "' are outcome-wise identical");
      }
    }
  }
}

RandomVariable Market::portfolio(const std::vector<double>& weights) const {
  if (weights.size() != assets_.size()) throw std::invalid_argument("Market: weight count mismatch");
  std::vector<double> v(assets_.front().size(), 0.0);
  for (std::size_t i = 0; i < assets_.size(); ++i) {
    if (weights[i] == 0.0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += weights[i] * assets_[i][k];
  }
  return assets_.front().with_values(std::move(v));
}

OptimizationResult maximize_acceptability(const Market& market, const RiskFunctional& mu,
                                          const RiskFunctional& rho,
                                          const OptimizerOptions& options) {
  const std::size_t n = market.size();
  OptimizationResult result;
  result.certification = (mu.flags().convex && rho.flags().convex) ? Certification::convex_certified
                                                                   : Certification::heuristic;
  const auto starts = starting_points(n, options.restarts, options.seed);
  result.restarts = static_cast<int>(starts.size());

  auto alpha_at = [&](const std::vector<double>& w) { return raroc(mu, rho, market.portfolio(w)); };

  // Best vertex: the optimizer never reports less.
  std::vector<double> best_w;
  ExtendedAcceptability best_alpha = ExtendedAcceptability::exact(0.0);
  double best_mu = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    const auto Y = market.portfolio(e);
    const double m = mu(Y);
    const auto a = raroc(mu, rho, Y);
    if (best_w.empty() || a.value() > best_alpha.value()) {
      best_alpha = a;
      best_w = e;
    }
    best_mu = std::max(best_mu, m);
    if (a.is_infinite()) {
      result.weights = e;
      result.achieved = a;
      return result;
    }
  }

  // Any weights with positive reward at all?
  if (best_mu <= kMuFloor) {
    const auto top = minimize_on_simplex(
        [&](const std::vector<double>& w) { return -mu(market.portfolio(w)); }, starts,
        -std::numeric_limits<double>::infinity());
    best_mu = std::max(best_mu, -top.value);
    if (best_mu <= kMuFloor) {
      result.weights = best_w;
      result.achieved = ExtendedAcceptability::exact(0.0);
      result.empty_feasible = true;
      return result;
    }
  }

  auto probe = [&](double x, std::vector<double>& argmin) {
    const auto c = minimize_on_simplex(
        [&](const std::vector<double>& w) { return raroc_family_rho(mu, rho, x, market.portfolio(w)); },
        starts, 0.0);
    const bool feasible = c.value <= 0.0;
    result.trace.push_back({x, feasible, c.value});
    if (feasible) argmin = c.weights;
    return feasible;
  };

  double lo = best_alpha.value();
  double hi = std::max(2.0 * lo, 1e-6);
  std::vector<double> w_lo = best_w;
  std::vector<double> scratch;
  while (probe(hi, scratch)) {
    ++result.outer_iterations;
    lo = hi;
    w_lo = scratch;
    if (hi >= options.x_max) {
      result.weights = w_lo;
      result.achieved = ExtendedAcceptability::capped(options.x_max);
      return result;
    }
    hi = std::min(2.0 * hi, options.x_max);
  }
  ++result.outer_iterations;
  while (hi - lo > options.tol * std::max(1.0, lo)) {
    const double mid = 0.5 * (lo + hi);
    ++result.outer_iterations;
    if (probe(mid, scratch)) {
      lo = mid;
      w_lo = scratch;
    } else {
      hi = mid;
    }
  }

  normalize(w_lo);
  auto achieved = alpha_at(w_lo);
  if (achieved.value() < best_alpha.value()) {
    w_lo = best_w;
    achieved = best_alpha;
  }
  result.weights = w_lo;
  result.achieved = achieved;
  result.boundary = mu(market.portfolio(w_lo)) <= kMuFloor;
  return result;
}

}  // namespace starshape
