#pragma once

#include "vpg/graph.hpp"

namespace vpg {

struct BruteForceCaps {
  std::size_t subset_cap = 20;     // wIS / wClique
  std::size_t partition_cap = 12;  // coloring / clique cover
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact optimum by exhaustive search. Ties break toward the
/// lexicographically smallest payload (vertex ids in input order).
Solution brute_force_solve(const WeightedGraph& g, Problem p,
                           const BruteForceCaps& caps = {});

}  // namespace vpg
