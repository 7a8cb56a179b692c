#pragma once

#include <map>
#include <string>
#include <vector>

#include "starshape/index_catalog.hpp"

namespace starshape {

/// A nonempty named collection of indexes.
class IndexEnsemble {
 public:
  explicit IndexEnsemble(std::vector<IndexSpec> members);

  const std::vector<IndexSpec>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  /// Member values on X, in member order.
  std::vector<ExtendedAcceptability> evaluate(const RandomVariable& X) const;

 private:
  std::vector<IndexSpec> members_;
};

struct CombineRule {
  enum class Kind { min, median, max, order_stat };
  Kind kind = Kind::min;
  /// 1-based rank from the bottom for order_stat.
  std::size_t k = 1;

  static CombineRule minimum() { return {Kind::min, 1}; }
  static CombineRule median() { return {Kind::median, 1}; }
  static CombineRule maximum() { return {Kind::max, 1}; }
  static CombineRule order_stat(std::size_t k) { return {Kind::order_stat, k}; }
};

/// Picks one member value by rule. Ordering uses value() with an exact
/// infinity above a capped value; the median is the lower median.
ExtendedAcceptability combine_values(std::vector<ExtendedAcceptability> values, CombineRule rule);
ExtendedAcceptability combine(const IndexEnsemble& ensemble, const RandomVariable& X,
                              CombineRule rule);
/// The combination as an index of its own.
IndexSpec combined_index(const IndexEnsemble& ensemble, CombineRule rule, std::string name);

class ScenarioSet {
 public:
  ScenarioSet(std::vector<std::string> names, std::vector<Scenario> scenarios, std::string base);
  /// Base measure only, named "P".
  static ScenarioSet base_only(const FiniteSpace& space);

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<Scenario>& scenarios() const noexcept { return scenarios_; }
  const std::string& base() const noexcept { return base_; }

 private:
  std::vector<std::string> names_;
  std::vector<Scenario> scenarios_;
  std::string base_;
};

/// Evaluates a law-invariant index under every reweighting; zero-weight
/// outcomes are dropped first.
std::map<std::string, ExtendedAcceptability> scenario_evaluate(const IndexSpec& index,
                                                                const RandomVariable& X,
                                                                const ScenarioSet& scenarios);

/// Ranges over model uncertainty. Infinite members propagate; inf - inf is
/// NaN ("undetermined"), never 0.
struct UncertaintyMeasures {
  double range = 0.0;
  double upper_half = 0.0;
  double lower_half = 0.0;
  ExtendedAcceptability robust_inf = ExtendedAcceptability::exact(0.0);
  bool has_infinite = false;
  bool undetermined = false;
};

UncertaintyMeasures uncertainty_measures(const std::map<std::string, ExtendedAcceptability>& values,
                                         const std::string& base);

}  // namespace starshape
