#include "starshape/robust.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "starshape/parallel.hpp"

namespace starshape {

IndexEnsemble::IndexEnsemble(std::vector<IndexSpec> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("IndexEnsemble: no members");
}

std::vector<ExtendedAcceptability> IndexEnsemble::evaluate(const RandomVariable& X) const {
  std::vector<ExtendedAcceptability> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(m(X));
  return out;
}

ExtendedAcceptability combine_values(std::vector<ExtendedAcceptability> values, CombineRule rule) {
  if (values.empty()) throw std::invalid_argument("combine: empty ensemble");
  std::stable_sort(values.begin(), values.end(),
                   [](const ExtendedAcceptability& a, const ExtendedAcceptability& b) {
                     return a.value() < b.value();
                   });
  switch (rule.kind) {
    case CombineRule::Kind::min:
      return values.front();
    case CombineRule::Kind::max:
      return values.back();
    case CombineRule::Kind::median:
      return values[(values.size() - 1) / 2];
    case CombineRule::Kind::order_stat:
      if (rule.k < 1 || rule.k > values.size()) {
        throw std::invalid_argument("combine: order statistic rank out of range");
      }
      return values[rule.k - 1];
  }
  return values.front();
}

ExtendedAcceptability combine(const IndexEnsemble& ensemble, const RandomVariable& X,
                              CombineRule rule) {
  return combine_values(ensemble.evaluate(X), rule);
}

IndexSpec combined_index(const IndexEnsemble& ensemble, CombineRule rule, std::string name) {
  IndexFlags flags{.scale_invariant = true, .quasi_concave = rule.kind == CombineRule::Kind::min,
                   .star_shaped = true, .law_invariant = true};
  for (const auto& m : ensemble.members()) {
    flags.scale_invariant = flags.scale_invariant && m.flags.scale_invariant;
    flags.quasi_concave = flags.quasi_concave && m.flags.quasi_concave;
    flags.star_shaped = flags.star_shaped && m.flags.star_shaped;
    flags.law_invariant = flags.law_invariant && m.flags.law_invariant;
  }
  if (ensemble.size() == 1) flags = ensemble.members().front().flags;
  return {std::move(name), "combination over " + std::to_string(ensemble.size()) + " indexes",
          [ensemble, rule](const RandomVariable& X) { return combine(ensemble, X, rule); }, flags};
}

ScenarioSet::ScenarioSet(std::vector<std::string> names, std::vector<Scenario> scenarios,
                         std::string base)
    : names_(std::move(names)), scenarios_(std::move(scenarios)), base_(std::move(base)) {
  if (names_.empty() || names_.size() != scenarios_.size()) {
    throw std::invalid_argument("ScenarioSet: need one name per scenario and at least one");
  }
  for (const auto& s : scenarios_) {
    if (s.size() != scenarios_.front().size()) {
      throw std::invalid_argument("ScenarioSet: scenarios live on different outcome sets");
    }
  }
  if (std::find(names_.begin(), names_.end(), base_) == names_.end()) {
    throw std::invalid_argument("ScenarioSet: base scenario '" + base_ + "' not in the set");
  }
}

ScenarioSet ScenarioSet::base_only(const FiniteSpace& space) {
  return ScenarioSet({"P"}, {Scenario(std::vector<double>(space.weights().begin(),
                                                          space.weights().end()))},
                     "P");
}

std::map<std::string, ExtendedAcceptability> scenario_evaluate(const IndexSpec& index,
                                                                const RandomVariable& X,
                                                                const ScenarioSet& scenarios) {
  if (!index.flags.law_invariant) {
    throw std::invalid_argument("scenario_evaluate: index '" + index.name +
                                "' is not law invariant");
  }
  const auto& list = scenarios.scenarios();
  if (list.front().size() != X.size()) {
    throw std::invalid_argument("scenario_evaluate: scenarios and position differ in outcomes");
  }
  std::vector<ExtendedAcceptability> values(list.size(), ExtendedAcceptability::exact(0.0));
  parallel_for(list.size(), [&](std::size_t i) { values[i] = index(reweight(X, list[i])); });
  std::map<std::string, ExtendedAcceptability> out;
  for (std::size_t i = 0; i < list.size(); ++i) out.insert_or_assign(scenarios.names()[i], values[i]);
  return out;
}

UncertaintyMeasures uncertainty_measures(const std::map<std::string, ExtendedAcceptability>& values,
                                         const std::string& base) {
  const auto it = values.find(base);
  if (it == values.end()) {
    throw std::invalid_argument("uncertainty_measures: base '" + base + "' missing");
  }
  std::vector<ExtendedAcceptability> all;
  for (const auto& [name, v] : values) all.push_back(v);
  const auto lo = combine_values(all, CombineRule::minimum());
  const auto hi = combine_values(all, CombineRule::maximum());
  const double b = it->second.extended();

  UncertaintyMeasures out;
  out.robust_inf = lo;
  out.range = hi.extended() - lo.extended();
  out.lower_half = b - lo.extended();
  out.upper_half = hi.extended() - b;
  out.has_infinite = hi.is_infinite();
  out.undetermined = std::isnan(out.range) || std::isnan(out.lower_half) ||
                     std::isnan(out.upper_half);
  return out;
}

}  // namespace starshape
