#include "starshape/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "starshape/parallel.hpp"
#include "starshape/robust.hpp"

namespace starshape {
namespace {

using Values = std::vector<ExtendedAcceptability>;

constexpr double kStarGrid[] = {1.0, 1.5, 2.0, 10.0};
constexpr double kScaleGrid[] = {0.1, 2.0, 10.0};
constexpr double kMixGrid[] = {0.25, 0.5, 0.75};

// Eight table indexes followed by Min, Median, Max.
struct Suite {
  std::vector<IndexSpec> table;
  std::vector<std::string> names;
  IndexSpec glr_coherent;

  Values evaluate(const RandomVariable& X) const {
    Values v;
    v.reserve(table.size() + 3);
    for (const auto& spec : table) v.push_back(spec(X));
    const Values members(v.begin(), v.end());
    v.push_back(combine_values(members, CombineRule::minimum()));
    v.push_back(combine_values(members, CombineRule::median()));
    v.push_back(combine_values(members, CombineRule::maximum()));
    return v;
  }
};

Suite make_suite(const CampaignOptions& options) {
  RdrSearchOptions search;
  search.restarts = options.rdr_restarts;
  Suite s{table_indexes(options.levels, RdrEvaluation::monotone_hull, search), {},
          *find_index("GLR_coherent")};
  for (const auto& spec : s.table) s.names.push_back(spec.name);
  s.names.insert(s.names.end(), {"Min", "Median", "Max"});
  return s;
}

SpacePtr random_space(std::mt19937_64& rng, std::size_t n, bool equal) {
  if (equal) return FiniteSpace::uniform(n);
  std::exponential_distribution<double> e(1.0);
  std::vector<double> w(n);
  for (auto& x : w) x = 0.05 + e(rng);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (auto& x : w) x /= total;
  return FiniteSpace::weighted(std::move(w));
}

std::vector<double> random_values(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> z(0.0, 1.0);
  std::vector<double> v(n);
  switch (kind(rng)) {
    case 0: {
      const double m = -0.5 + 1.5 * u(rng);
      const double s = 0.2 + 1.8 * u(rng);
      for (auto& x : v) x = m + s * z(rng);
      break;
    }
    case 1: {
      std::uniform_int_distribution<int> k(-3, 5);
      for (auto& x : v) x = k(rng);
      break;
    }
    case 2:
      for (auto& x : v) x = u(rng) < 0.2 ? 0.0 : 2.0 * u(rng);
      break;
    case 3:
      for (auto& x : v) x = 0.2 + z(rng) / std::sqrt(0.1 + u(rng));
      break;
    case 4:
      for (auto& x : v) x = -0.1 - u(rng);
      break;
    default:
      for (auto& x : v) x = 0.5 + u(rng);
      v[static_cast<std::size_t>(u(rng) * n) % n] = -5.0 * u(rng);
      break;
  }
  return v;
}

// Y <= X: lower a random subset of outcomes.
std::vector<double> dominated(std::mt19937_64& rng, const std::vector<double>& x) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> y(x);
  const double share = u(rng);
  const double size = 0.01 + 2.0 * u(rng);
  for (auto& v : y) {
    if (u(rng) < share) v -= size * u(rng);
  }
  return y;
}

struct TrialOutcome {
  std::vector<Violation> violations;
  std::map<std::string, std::optional<QuasiConcavityViolation>> counterexamples;
  std::map<std::string, int> qc_failures;
  std::map<std::string, std::string> plain_rdr;
};

std::string values_to_string(std::span<const double> v) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

void check_trial(const Suite& suite, const CampaignOptions& options, int trial,
                 TrialOutcome& out) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                    static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::size_t> size(options.min_outcomes, options.max_outcomes);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  const std::size_t n = size(rng);
  const bool equal = u(rng) < 0.6;
  const auto space = random_space(rng, n, equal);
  const auto xv = random_values(rng, n);
  const RandomVariable X(space, xv);
  const RandomVariable Y(space, dominated(rng, xv));
  const auto count = suite.names.size();

  auto fail = [&](std::size_t k, const std::string& property, const std::string& detail) {
    out.violations.push_back({suite.names[k], property, trial, detail});
  };

  const auto vx = suite.evaluate(X);
  const auto vy = suite.evaluate(Y);
  for (std::size_t k = 0; k < count; ++k) {
    if (!at_least(vx[k], vy[k])) {
      fail(k, "monotonicity", "alpha(X)=" + vx[k].to_string() + " < alpha(Y)=" +
                                  vy[k].to_string() + " for X=" + values_to_string(X.values()) +
                                  " Y=" + values_to_string(Y.values()) +
                                  (equal ? "" : " weights=" + values_to_string(space->weights())));
    }
  }

  std::vector<Values> star;
  for (double lambda : kStarGrid) {
    star.push_back(lambda == 1.0 ? vx : suite.evaluate(affine(X, lambda, 0.0)));
  }
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t j = 1; j < star.size(); ++j) {
      if (!at_least(star[j - 1][k], star[j][k]) || !at_least(vx[k], star[j][k])) {
        fail(k, "star-shapedness",
             "alpha(" + std::to_string(kStarGrid[j]) + " X)=" + star[j][k].to_string() +
                 " exceeds alpha at a smaller scale for X=" + values_to_string(X.values()));
        break;
      }
    }
  }

  for (double lambda : kScaleGrid) {
    const auto vs = lambda == 2.0 ? star[2] : lambda == 10.0 ? star[3]
                                                             : suite.evaluate(affine(X, lambda, 0.0));
    for (std::size_t k = 0; k < count; ++k) {
      const bool flagged = k < suite.table.size() ? suite.table[k].flags.scale_invariant : true;
      if (flagged && !same_value(vs[k], vx[k])) {
        fail(k, "scale invariance",
             "alpha(" + std::to_string(lambda) + " X)=" + vs[k].to_string() +
                 " != alpha(X)=" + vx[k].to_string() + " for X=" + values_to_string(X.values()));
      }
    }
  }

  const auto vzero = suite.evaluate(constant_like(X, 0.0));
  const double c = -0.01 - 5.0 * u(rng);
  const auto vneg = suite.evaluate(constant_like(X, c));
  for (std::size_t k = 0; k < count; ++k) {
    if (!vzero[k].is_infinite()) fail(k, "alpha(0)=inf", "alpha(0)=" + vzero[k].to_string());
    if (vneg[k].value() != 0.0 || vneg[k].is_infinite()) {
      fail(k, "weak expectation consistency",
           "alpha(" + std::to_string(c) + ")=" + vneg[k].to_string());
    }
  }

  if (equal) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> pv(n);
    for (std::size_t i = 0; i < n; ++i) pv[i] = xv[perm[i]];
    const auto vp = suite.evaluate(X.with_values(std::move(pv)));
    for (std::size_t k = 0; k < count; ++k) {
      if (vp[k].value() != vx[k].value() || vp[k].mode() != vx[k].mode()) {
        fail(k, "law invariance",
             "permutation moved alpha from " + vx[k].to_string() + " to " + vp[k].to_string());
      }
    }
  }

  // Quasi-concavity: an independent second position on the same space.
  const RandomVariable Z(space, random_values(rng, n));
  const auto& GLR = suite.table[4];
  const auto& VaR = suite.table[0];
  const auto& ES = suite.table[1];
  // alpha_ES never exceeds the coherent GLR, so their max would just be the
  // (quasi-concave) GLR; RAROC and alpha_ES are not nested.
  const auto& RAROC = suite.table[2];
  const IndexSpec max_coherent =
      combined_index(IndexEnsemble({ES, RAROC}), CombineRule::maximum(), "max(ES, RAROC)");
  // Shifting Z moves its index level towards that of X, where violations of
  // quasi-concavity are most likely to show.
  const double spread = std::max(1e-3, Z.max() - Z.min());
  for (const IndexSpec* target : {&GLR, &VaR, &max_coherent}) {
    auto& slot = out.counterexamples[target->name];
    for (double shift : {0.0, -0.25, 0.25, -0.1, 0.1, 0.5}) {
      slot = find_quasi_concavity_violation(*target, X, affine(Z, 1.0, shift * spread), kMixGrid);
      if (slot) break;
    }
  }
  for (const IndexSpec* clean : {&ES, &suite.glr_coherent}) {
    out.qc_failures[clean->name] += find_quasi_concavity_violation(*clean, X, Z, kMixGrid) ? 1 : 0;
  }

  // Plain ratios, reported but not counted.
  const auto plain = table_indexes(options.levels, RdrEvaluation::plain_ratio);
  for (std::size_t k : {std::size_t{6}, std::size_t{7}}) {
    const auto a = plain[k](X);
    const auto b = plain[k](Y);
    if (!at_least(a, b)) {
      out.plain_rdr[plain[k].name] = "plain ratio " + a.to_string() + " at X=" +
                                     values_to_string(X.values()) + " < " + b.to_string() +
                                     " at Y=" + values_to_string(Y.values()) + " <= X";
    }
  }
}

}  // namespace

bool CampaignReport::passed() const {
  if (!violations.empty()) return false;
  for (const auto& [name, found] : required_counterexamples) {
    if (!found) return false;
  }
  for (const auto& [name, failures] : quasi_concave_failures) {
    if (failures != 0) return false;
  }
  return true;
}

std::string CampaignReport::to_text() const {
  std::ostringstream os;
  os << "axiom campaign: seed " << options.seed << ", " << trials_run << " trials, "
     << options.min_outcomes << "-" << options.max_outcomes << " outcomes, " << seconds
     << " s\n";
  std::map<std::string, std::map<std::string, int>> counts;
  for (const auto& v : violations) ++counts[v.index][v.property];
  for (const auto& name : indexes) {
    os << "  " << name << ": ";
    if (counts[name].empty()) {
      os << "no violations\n";
      continue;
    }
    bool first = true;
    for (const auto& [property, n] : counts[name]) {
      os << (first ? "" : ", ") << n << " " << property;
      first = false;
    }
    os << "\n";
  }
  const std::size_t shown = std::min<std::size_t>(violations.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& v = violations[i];
    os << "  violation [trial " << v.trial << "] " << v.index << " " << v.property << ": "
       << v.detail << "\n";
  }
  os << "quasi-concavity counterexamples (required)\n";
  for (const auto& [name, found] : required_counterexamples) {
    os << "  " << name << ": ";
    if (!found) {
      os << "NOT FOUND\n";
      continue;
    }
    os << "alpha(mix " << found->lambda << ")=" << found->alpha_mix.to_string()
       << " < min(" << found->alpha_x.to_string() << ", " << found->alpha_y.to_string()
       << ") with X=" << values_to_string(found->x) << " Y=" << values_to_string(found->y)
       << "\n";
  }
  os << "quasi-concavity (must hold)\n";
  for (const auto& [name, failures] : quasi_concave_failures) {
    os << "  " << name << ": " << failures << " violations\n";
  }
  if (!plain_rdr_monotonicity.empty()) {
    os << "note: plain reward-deviation ratios are not monotone (hull is checked instead)\n";
    for (const auto& [name, detail] : plain_rdr_monotonicity) os << "  " << name << ": " << detail << "\n";
  }
  os << (passed() ? "PASSED" : "FAILED") << "\n";
  return os.str();
}

CampaignReport run_axiom_campaign(const CampaignOptions& options) {
  if (options.trials < 0 || options.min_outcomes < 2 || options.max_outcomes < options.min_outcomes) {
    throw std::invalid_argument("run_axiom_campaign: invalid trial count or outcome range");
  }
  const auto start = std::chrono::steady_clock::now();
  const Suite suite = make_suite(options);
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(options.trials));
  parallel_for(outcomes.size(), [&](std::size_t t) {
    check_trial(suite, options, static_cast<int>(t), outcomes[t]);
  });

  CampaignReport report;
  report.options = options;
  report.trials_run = options.trials;
  report.indexes = suite.names;
  for (const char* name : {"GLR", "VaR", "max(ES, RAROC)"}) {
    report.required_counterexamples[name] = std::nullopt;
  }
  for (const char* name : {"ES", "GLR_coherent"}) report.quasi_concave_failures[name] = 0;
  for (auto& o : outcomes) {
    for (auto& v : o.violations) report.violations.push_back(std::move(v));
    for (auto& [name, found] : o.counterexamples) {
      auto& slot = report.required_counterexamples[name];
      if (!slot && found) slot = std::move(found);
    }
    for (const auto& [name, n] : o.qc_failures) report.quasi_concave_failures[name] += n;
    for (auto& [name, detail] : o.plain_rdr) report.plain_rdr_monotonicity.try_emplace(name, detail);
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace starshape
