#include "vpg/perm.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace vpg {

namespace {

std::map<Id, std::size_t> position_map(const std::vector<Id>& ids,
                                       const std::vector<Id>& perm,
                                       const char* what) {
  if (perm.size() != ids.size())
    throw std::invalid_argument(std::string(what) + " has wrong length");
  std::map<Id, std::size_t> pos;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (!pos.emplace(perm[i], i).second)
      throw std::invalid_argument(std::string(what) + " repeats an id");
  for (Id id : ids)
    if (!pos.count(id))
      throw std::invalid_argument(std::string(what) + " misses an id");
  return pos;
}

}  // namespace

void PermInstance::check() const {
  if (weights.size() != ids.size())
    throw std::invalid_argument("weights length mismatch");
  position_map(ids, perm1, "perm1");
  position_map(ids, perm2, "perm2");
}

void Dim3Instance::check() const {
  if (weights.size() != ids.size())
    throw std::invalid_argument("weights length mismatch");
  position_map(ids, perm1, "perm1");
  position_map(ids, perm2, "perm2");
  position_map(ids, perm3, "perm3");
}

WeightedGraph disagreement_graph(const PermInstance& inst) {
  auto p1 = position_map(inst.ids, inst.perm1, "perm1");
  auto p2 = position_map(inst.ids, inst.perm2, "perm2");
  WeightedGraph g;
  g.ids = inst.ids;
  g.weights = inst.weights;
  g.adj.assign(inst.n(), std::vector<uint8_t>(inst.n(), 0));
  for (std::size_t i = 0; i < inst.n(); ++i)
    for (std::size_t j = i + 1; j < inst.n(); ++j) {
      Id u = inst.ids[i], v = inst.ids[j];
      bool d = (p1[u] < p1[v]) != (p2[u] < p2[v]);
      g.adj[i][j] = g.adj[j][i] = d ? 1 : 0;
    }
  return g;
}

WeightedGraph disagreement_graph(const Dim3Instance& inst) {
  auto p1 = position_map(inst.ids, inst.perm1, "perm1");
  auto p2 = position_map(inst.ids, inst.perm2, "perm2");
  auto p3 = position_map(inst.ids, inst.perm3, "perm3");
  WeightedGraph g;
  g.ids = inst.ids;
  g.weights = inst.weights;
  g.adj.assign(inst.n(), std::vector<uint8_t>(inst.n(), 0));
  for (std::size_t i = 0; i < inst.n(); ++i)
    for (std::size_t j = i + 1; j < inst.n(); ++j) {
      Id u = inst.ids[i], v = inst.ids[j];
      bool a = p1[u] < p1[v], b = p2[u] < p2[v], c = p3[u] < p3[v];
      bool edge = !(a == b && b == c);
      g.adj[i][j] = g.adj[j][i] = edge ? 1 : 0;
    }
  return g;
}

namespace {

struct ChainEntry {
  Rat best{0};
  int vertex = -1;  // index into the processing order
};

/// Fenwick tree over positions keeping a running prefix maximum of chain
/// weights, with deterministic tie-breaks toward the earlier vertex.
struct PrefixMax {
  std::vector<ChainEntry> tree;
  explicit PrefixMax(std::size_t n) : tree(n + 1) {}
  void update(std::size_t pos, const ChainEntry& e) {
    for (std::size_t i = pos + 1; i < tree.size(); i += i & (~i + 1)) {
      if (e.best > tree[i].best) tree[i] = e;
    }
  }
  ChainEntry query(std::size_t count) const {  // max over first `count` positions
    ChainEntry out;
    for (std::size_t i = count; i > 0; i -= i & (~i + 1)) {
      if (tree[i].best > out.best) out = tree[i];
    }
    return out;
  }
};

/// Weighted heaviest chain: vertices are taken in perm1 order; a vertex may
/// follow another iff their perm2 positions are increasing (`increasing`) or
/// decreasing. Returns the chosen ids in perm1 order and the total weight.
std::pair<std::vector<Id>, Rat> heaviest_chain(const PermInstance& inst,
                                               bool increasing) {
  const std::size_t n = inst.n();
  auto p2 = position_map(inst.ids, inst.perm2, "perm2");
  std::map<Id, Rat> weight_of;
  for (std::size_t i = 0; i < n; ++i) weight_of[inst.ids[i]] = inst.weights[i];

  PrefixMax fen(n);
  std::vector<Rat> dp(n);
  std::vector<int> prev(n, -1);
  Rat best{0};
  int best_at = -1;
  for (std::size_t i = 0; i < n; ++i) {
    Id u = inst.perm1[i];
    std::size_t q = p2[u];
    std::size_t key = increasing ? q : n - 1 - q;  // strictly smaller key may precede
    ChainEntry e = fen.query(key);
    dp[i] = weight_of[u] + e.best;
    prev[i] = e.vertex;
    fen.update(key, ChainEntry{dp[i], static_cast<int>(i)});
    if (dp[i] > best) {
      best = dp[i];
      best_at = static_cast<int>(i);
    }
  }
  std::vector<Id> chain;
  for (int at = best_at; at != -1; at = prev[at]) chain.push_back(inst.perm1[at]);
  std::reverse(chain.begin(), chain.end());
  return {chain, best};
}

/// Patience partition of perm1 order into piles monotone in perm2 position.
/// `increasing` piles are independent sets; decreasing piles are cliques.
std::vector<std::vector<Id>> patience_piles(const PermInstance& inst,
                                            bool increasing) {
  auto p2 = position_map(inst.ids, inst.perm2, "perm2");
  std::vector<std::vector<Id>> piles;
  std::vector<std::size_t> last_key;
  for (Id u : inst.perm1) {
    std::size_t q = p2[u];
    bool placed = false;
    for (std::size_t k = 0; k < piles.size() && !placed; ++k) {
      bool fits = increasing ? last_key[k] < q : last_key[k] > q;
      if (fits) {
        piles[k].push_back(u);
        last_key[k] = q;
        placed = true;
      }
    }
    if (!placed) {
      piles.push_back({u});
      last_key.push_back(q);
    }
  }
  return piles;
}

}  // namespace

Solution perm_mwis(const PermInstance& inst) {
  inst.check();
  auto [chain, value] = heaviest_chain(inst, true);
  Solution s;
  s.problem = Problem::WIS;
  s.vertex_set = chain;
  std::sort(s.vertex_set.begin(), s.vertex_set.end());
  s.value = value;
  return s;
}

Solution perm_max_weight_clique(const PermInstance& inst) {
  inst.check();
  auto [chain, value] = heaviest_chain(inst, false);
  Solution s;
  s.problem = Problem::WClique;
  s.vertex_set = chain;
  std::sort(s.vertex_set.begin(), s.vertex_set.end());
  s.value = value;
  return s;
}

Solution perm_min_coloring(const PermInstance& inst) {
  inst.check();
  auto piles = patience_piles(inst, true);
  Solution s;
  s.problem = Problem::Coloring;
  std::map<Id, int> color;
  for (std::size_t k = 0; k < piles.size(); ++k)
    for (Id u : piles[k]) color[u] = static_cast<int>(k) + 1;
  for (Id u : inst.ids) s.coloring.emplace_back(u, color.at(u));
  s.value = Rat(static_cast<long long>(piles.size()));
  return s;
}

Solution perm_min_clique_cover(const PermInstance& inst) {
  inst.check();
  auto piles = patience_piles(inst, false);
  Solution s;
  s.problem = Problem::CliqueCover;
  s.cliques = piles;
  for (auto& q : s.cliques) std::sort(q.begin(), q.end());
  s.value = Rat(static_cast<long long>(piles.size()));
  return s;
}

namespace {

/// Dinic max-flow with long long capacities; kInf marks unbounded arcs.
struct FlowNet {
  static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  struct Arc {
    int to;
    long long cap;
    int rev;
  };
  std::vector<std::vector<Arc>> g;
  std::vector<int> level, it;

  explicit FlowNet(int n) : g(n), level(n), it(n) {}

  void add(int a, int b, long long cap) {
    g[a].push_back({b, cap, static_cast<int>(g[b].size())});
    g[b].push_back({a, 0, static_cast<int>(g[a].size()) - 1});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& a : g[v])
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[v] + 1;
          q.push(a.to);
        }
    }
    return level[t] >= 0;
  }

  long long dfs(int v, int t, long long f) {
    if (v == t) return f;
    for (int& i = it[v]; i < static_cast<int>(g[v].size()); ++i) {
      Arc& a = g[v][i];
      if (a.cap > 0 && level[v] < level[a.to]) {
        long long d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          g[a.to][a.rev].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  long long max_flow(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      std::fill(it.begin(), it.end(), 0);
      long long f;
      while ((f = dfs(s, t, kInf)) > 0) flow += f;
    }
    return flow;
  }
};

}  // namespace

Solution dim3_max_weight_clique(const Dim3Instance& inst) {
  inst.check();
  const std::size_t n = inst.n();
  Solution s;
  s.problem = Problem::WClique;
  if (n == 0) {
    s.value = Rat(0);
    return s;
  }

  auto p1 = position_map(inst.ids, inst.perm1, "perm1");
  auto p2 = position_map(inst.ids, inst.perm2, "perm2");
  auto p3 = position_map(inst.ids, inst.perm3, "perm3");
  auto before = [&](std::size_t i, std::size_t j) {
    Id u = inst.ids[i], v = inst.ids[j];
    return p1[u] < p1[v] && p2[u] < p2[v] && p3[u] < p3[v];
  };

  // Scale weights to integers with a common denominator.
  long long denom = 1;
  for (const auto& w : inst.weights) denom = std::lcm(denom, w.den);
  std::vector<long long> w(n);
  for (std::size_t i = 0; i < n; ++i)
    w[i] = inst.weights[i].num * (denom / inst.weights[i].den);

  // Min flow with lower bound w(v) on each split arc equals the max-weight
  // antichain. Start from the feasible flow routing w(v) along s->v->v'->t,
  // then cancel as much as possible with a t->s max-flow on the residual:
  //   forward residual of an unbounded arc: inf
  //   backward residual: current flow minus the lower bound.
  const int S = static_cast<int>(2 * n);
  const int T = S + 1;
  FlowNet net(static_cast<int>(2 * n) + 2);
  auto vin = [](std::size_t i) { return static_cast<int>(2 * i); };
  auto vout = [](std::size_t i) { return static_cast<int>(2 * i + 1); };

  // Residual graph of the initial feasible flow, as capacities for the t->s run.
  for (std::size_t i = 0; i < n; ++i) {
    net.add(S, vin(i), FlowNet::kInf);      // can still increase
    net.add(vin(i), S, w[i]);               // can cancel the routed w[i]
    net.add(vout(i), T, FlowNet::kInf);
    net.add(T, vout(i), w[i]);
    net.add(vin(i), vout(i), FlowNet::kInf);  // split arc above its lower bound
    // decreasing below w[i] is impossible: no reverse arc
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && before(i, j)) net.add(vout(i), vin(j), FlowNet::kInf);

  long long cancelled = net.max_flow(T, S);
  long long total = 0;
  for (long long x : w) total += x;
  long long min_flow = total - cancelled;

  // The antichain is read off the final residual: take v whose split arc is
  // tight and whose v' is reachable from t while v is not.
  std::vector<char> reach(net.g.size(), 0);
  {
    std::queue<int> q;
    q.push(T);
    reach[T] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& a : net.g[v])
        if (a.cap > 0 && !reach[a.to]) {
          reach[a.to] = 1;
          q.push(a.to);
        }
    }
  }
  Rat value{0};
  std::vector<Id> antichain;
  for (std::size_t i = 0; i < n; ++i) {
    if (reach[vout(i)] && !reach[vin(i)]) {
      antichain.push_back(inst.ids[i]);
      value += inst.weights[i];
    }
  }
  std::sort(antichain.begin(), antichain.end());
  s.vertex_set = antichain;
  s.value = value;
  if (value != Rat(min_flow, denom))
    throw std::logic_error("antichain extraction disagrees with min flow value");
  return s;
}

}  // namespace vpg
