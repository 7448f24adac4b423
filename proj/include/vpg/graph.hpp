#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vpg/geometry.hpp"
#include "vpg/rational.hpp"

namespace vpg {

/// Weighted graph over representation object ids. Vertex order is the input
/// order and is preserved by every operation.
struct WeightedGraph {
  std::vector<Id> ids;
  std::vector<Rat> weights;
  std::vector<std::vector<uint8_t>> adj;  // symmetric 0/1 matrix

  std::size_t n() const { return ids.size(); }
  std::size_t index_of(Id id) const;
  bool has_edge(std::size_t u, std::size_t v) const { return adj[u][v] != 0; }
  std::size_t edge_count() const;
  Rat total_weight() const;
};

enum class Problem { WIS, WClique, Coloring, CliqueCover };

const char* problem_name(Problem p);
Problem problem_from_name(const std::string& s);

struct Solution {
  Problem problem = Problem::WIS;
  std::vector<Id> vertex_set;                 // WIS / WClique
  std::vector<std::pair<Id, int>> coloring;   // Coloring, colors 1..k
  std::vector<std::vector<Id>> cliques;       // CliqueCover
  Rat value{0};                               // weight, or color/clique count
};

WeightedGraph build_intersection_graph(const Representation& rep);

WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<Id>& keep);

WeightedGraph complement(const WeightedGraph& g);

/// Checks payload validity for the solution's problem tag.
bool solution_valid(const WeightedGraph& g, const Solution& s, std::string* why = nullptr);

}  // namespace vpg
