#pragma once

#include <functional>

#include "vpg/brute_force.hpp"
#include "vpg/certificates.hpp"
#include "vpg/graph.hpp"

namespace vpg {

/// Exact maximum-weight independent set on one decomposition part. The
/// default is a branch-and-bound on the induced graph; the signature keeps
/// room for a representation-based solver to slot in later.
using OuterstringMwisSolver =
    std::function<Solution(const Part& part, const WeightedGraph& induced)>;

/// Branch-and-bound MWIS. Throws CapExceeded above `cap` vertices.
Solution mwis_branch_and_bound(const WeightedGraph& g, std::size_t cap = 64);

/// Default solver: validates the part has an outerstring certificate, then
/// runs branch-and-bound on the induced subgraph.
Solution outerstring_mwis(const Part& part, const WeightedGraph& induced,
                          std::size_t cap = 64);

}  // namespace vpg
