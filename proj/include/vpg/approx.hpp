#pragma once

#include <functional>

#include "vpg/certificates.hpp"
#include "vpg/decompose.hpp"
#include "vpg/graph.hpp"
#include "vpg/outerstring_mwis.hpp"

namespace vpg {

/// Result of a decompose-and-combine approximation run. `parts_used` is the
/// realized part count k; the guarantee the pipeline proves is
/// value >= OPT / k, with k itself bounded by `factor_formula` in n.
struct ApproxResult {
  Solution solution;
  std::size_t parts_used = 0;
  BoundFormula factor_formula = BoundFormula::TwoLog2N;
  std::vector<Solution> per_part;
  std::vector<std::size_t> audit_rounds;  // coloring only: parts per round
};

/// Weighted independent set via the outerstring decomposition. Accepts
/// single-vertical representations directly; other B2 inputs go through the
/// vertical-count split first (factor 4 log n instead of 2 log n).
ApproxResult approx_wis(const Representation& rep, std::size_t solver_cap = 64);

/// Weighted clique via permutation / dim-3 parts. B1 inputs use the B1
/// pipeline (4 log^2 n); otherwise the B2 pipeline (8 log^3 n).
ApproxResult approx_weighted_clique(const Representation& rep, bool onestring);

/// Clique cover: optimal per-part covers, union over parts.
ApproxResult approx_clique_cover(const Representation& rep, bool onestring);

/// Iterative peeling: repeatedly extract an independent set of the remaining
/// representation and assign it the next color. The default solver is
/// approx_wis with unit weights.
ApproxResult approx_coloring(
    const Representation& rep,
    const std::function<Solution(const Representation&)>& is_solver = {},
    std::size_t solver_cap = 64);

}  // namespace vpg
