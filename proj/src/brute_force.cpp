#include "vpg/brute_force.hpp"

#include <algorithm>

namespace vpg {

namespace {

std::vector<Id> mask_to_ids(const WeightedGraph& g, unsigned long long mask) {
  std::vector<Id> out;
  for (std::size_t i = 0; i < g.n(); ++i)
    if (mask >> i & 1ULL) out.push_back(g.ids[i]);
  return out;
}

/// Lexicographic order on the sorted-id payloads of two masks, using vertex
/// input order as the id order.
bool mask_lex_less(const WeightedGraph& g, unsigned long long a,
                   unsigned long long b) {
  return mask_to_ids(g, a) < mask_to_ids(g, b);
}

Solution best_subset(const WeightedGraph& g, Problem p) {
  const std::size_t n = g.n();
  std::vector<unsigned long long> bad(n, 0);  // forbidden / required partners
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && g.adj[i][j]) bad[i] |= 1ULL << j;

  bool want_is = p == Problem::WIS;
  Rat best_value{0};
  unsigned long long best_mask = 0;
  for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1ULL)) continue;
      unsigned long long others = mask & ~(1ULL << i);
      if (want_is ? (bad[i] & mask) != 0 : (bad[i] & others) != others) ok = false;
    }
    if (!ok) continue;
    Rat value{0};
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1ULL) value += g.weights[i];
    if (value > best_value ||
        (value == best_value && mask_lex_less(g, mask, best_mask))) {
      best_value = value;
      best_mask = mask;
    }
  }
  Solution s;
  s.problem = p;
  s.vertex_set = mask_to_ids(g, best_mask);
  s.value = best_value;
  return s;
}

/// Finds the lexicographically smallest proper coloring with at most k
/// colors, trying colors in ascending order and capping fresh colors.
bool color_with(const WeightedGraph& g, int k, std::vector<int>& colors) {
  const std::size_t n = g.n();
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& rec, std::size_t v, int used) -> bool {
    if (v == n) {
      colors = cur;
      return true;
    }
    int limit = std::min(k, used + 1);
    for (int c = 1; c <= limit; ++c) {
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u)
        if (g.adj[u][v] && cur[u] == c) ok = false;
      if (!ok) continue;
      cur[v] = c;
      if (rec(rec, v + 1, std::max(used, c))) return true;
      cur[v] = 0;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

Solution best_coloring(const WeightedGraph& g) {
  Solution s;
  s.problem = Problem::Coloring;
  if (g.n() == 0) {
    s.value = Rat(0);
    return s;
  }
  for (int k = 1;; ++k) {
    std::vector<int> colors;
    if (color_with(g, k, colors)) {
      int used = 0;
      for (std::size_t i = 0; i < g.n(); ++i) {
        s.coloring.emplace_back(g.ids[i], colors[i]);
        used = std::max(used, colors[i]);
      }
      s.value = Rat(used);
      return s;
    }
  }
}

Solution best_clique_cover(const WeightedGraph& g) {
  WeightedGraph co = complement(g);
  Solution coloring = best_coloring(co);
  Solution s;
  s.problem = Problem::CliqueCover;
  int k = static_cast<int>(coloring.value.num);
  s.cliques.assign(k, {});
  for (auto [id, c] : coloring.coloring) s.cliques[c - 1].push_back(id);
  s.cliques.erase(std::remove_if(s.cliques.begin(), s.cliques.end(),
                                 [](const auto& q) { return q.empty(); }),
                  s.cliques.end());
  s.value = Rat(static_cast<long long>(s.cliques.size()));
  return s;
}

}  // namespace

Solution brute_force_solve(const WeightedGraph& g, Problem p,
                           const BruteForceCaps& caps) {
  if (p == Problem::WIS || p == Problem::WClique) {
    if (g.n() > caps.subset_cap)
      throw CapExceeded("brute force subset cap exceeded: n=" +
                        std::to_string(g.n()));
    return best_subset(g, p);
  }
  if (g.n() > caps.partition_cap)
    throw CapExceeded("brute force partition cap exceeded: n=" +
                      std::to_string(g.n()));
  return p == Problem::Coloring ? best_coloring(g) : best_clique_cover(g);
}

}  // namespace vpg
