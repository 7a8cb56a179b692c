#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "starshape/acceptability.hpp"

namespace starshape {

/// Claimed properties of an index. The axiom campaign tests them; evaluators
/// never rely on them.
struct IndexFlags {
  bool scale_invariant = false;
  bool quasi_concave = false;
  bool star_shaped = true;
  bool law_invariant = true;
};

struct IndexSpec {
  using Evaluator = std::function<ExtendedAcceptability(const RandomVariable&)>;

  std::string name;
  std::string description;
  Evaluator evaluate;
  IndexFlags flags;

  ExtendedAcceptability operator()(const RandomVariable& X) const { return evaluate(X); }
};

/// Tail and median levels of the empirical tables.
struct TableLevels {
  double tail = 0.05;
  double median = 0.50;
};

/// How the two reward-deviation indexes of the tables are evaluated. The
/// tables use the plain ratio; the plain ratio is not monotone, so property
/// checks use the monotone hull (sup over Y <= X).
enum class RdrEvaluation { plain_ratio, monotone_hull };

/// The eight table indexes in table order:
/// VaR, ES, RAROC, RAROC_SS, GLR, GLR_SS, RDR, RDR_SS.
std::vector<IndexSpec> table_indexes(const TableLevels& levels = {},
                                     RdrEvaluation rdr = RdrEvaluation::plain_ratio,
                                     const RdrSearchOptions& search = {});

/// Table indexes plus library-level extras (GLR_coherent), by
/// case-insensitive name. Returns nullopt for unknown names.
std::optional<IndexSpec> find_index(const std::string& name, const TableLevels& levels = {},
                                    RdrEvaluation rdr = RdrEvaluation::plain_ratio);

std::vector<std::string> index_names();

}  // namespace starshape
