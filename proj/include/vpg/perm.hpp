#pragma once

#include "vpg/graph.hpp"

namespace vpg {

/// Permutation-graph instance: vertex ids plus two orders over them.
/// (u,v) is an edge iff the two orders disagree on the pair.
struct PermInstance {
  std::vector<Id> ids;        // canonical vertex order (carries weights)
  std::vector<Rat> weights;
  std::vector<Id> perm1;
  std::vector<Id> perm2;

  std::size_t n() const { return ids.size(); }
  void check() const;  // throws on non-bijections
};

/// Poset-dimension-3 co-comparability instance: edge iff some two of the
/// three orders disagree on the pair.
struct Dim3Instance {
  std::vector<Id> ids;
  std::vector<Rat> weights;
  std::vector<Id> perm1;
  std::vector<Id> perm2;
  std::vector<Id> perm3;

  std::size_t n() const { return ids.size(); }
  void check() const;
};

WeightedGraph disagreement_graph(const PermInstance& inst);
WeightedGraph disagreement_graph(const Dim3Instance& inst);

Solution perm_mwis(const PermInstance& inst);
Solution perm_max_weight_clique(const PermInstance& inst);
Solution perm_min_coloring(const PermInstance& inst);
Solution perm_min_clique_cover(const PermInstance& inst);

/// Max-weight antichain of the 3-dimensional dominance order, i.e. maximum
/// weight clique of the co-comparability graph. Exact; weights are scaled to
/// integers internally.
Solution dim3_max_weight_clique(const Dim3Instance& inst);

}  // namespace vpg
