#include "vpg/outerstring_mwis.hpp"

#include <algorithm>

namespace vpg {

namespace {

struct Bnb {
  const WeightedGraph& g;
  std::vector<unsigned long long> nbr;
  std::vector<std::size_t> order;  // by degree, densest first
  Rat best{0};
  unsigned long long best_mask = 0;

  explicit Bnb(const WeightedGraph& graph) : g(graph) {
    const std::size_t n = g.n();
    nbr.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && g.adj[i][j]) nbr[i] |= 1ULL << j;
    order.resize(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return __builtin_popcountll(nbr[a]) > __builtin_popcountll(nbr[b]);
    });
  }

  void run(unsigned long long open, Rat current, unsigned long long chosen) {
    Rat optimistic = current;
    for (std::size_t i = 0; i < g.n(); ++i)
      if (open >> i & 1ULL) optimistic += g.weights[i];
    if (optimistic <= best) return;  // keeps the first-found optimum
    std::size_t pick = g.n();
    for (std::size_t k : order)
      if (open >> k & 1ULL) {
        pick = k;
        break;
      }
    if (pick == g.n()) {
      if (current > best) {
        best = current;
        best_mask = chosen;
      }
      return;
    }
    // Include, then exclude.
    run(open & ~(nbr[pick] | (1ULL << pick)), current + g.weights[pick],
        chosen | (1ULL << pick));
    run(open & ~(1ULL << pick), current, chosen);
  }
};

}  // namespace

Solution mwis_branch_and_bound(const WeightedGraph& g, std::size_t cap) {
  if (g.n() > cap)
    throw CapExceeded("mwis solver cap exceeded: n=" + std::to_string(g.n()) +
                      " cap=" + std::to_string(cap));
  Solution s;
  s.problem = Problem::WIS;
  if (g.n() == 0) return s;
  Bnb bnb(g);
  bnb.run((g.n() == 64 ? ~0ULL : (1ULL << g.n()) - 1), Rat(0), 0);
  for (std::size_t i = 0; i < g.n(); ++i)
    if (bnb.best_mask >> i & 1ULL) s.vertex_set.push_back(g.ids[i]);
  s.value = bnb.best;
  return s;
}

Solution outerstring_mwis(const Part& part, const WeightedGraph& induced,
                          std::size_t cap) {
  if (!std::holds_alternative<OuterstringCert>(part.cert))
    throw std::invalid_argument(
        "outerstring_mwis needs a part with an outerstring certificate");
  return mwis_branch_and_bound(induced, cap);
}

}  // namespace vpg
