#include "vpg/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace vpg {

std::size_t WeightedGraph::index_of(Id id) const {
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) return i;
  throw std::out_of_range("unknown vertex id " + std::to_string(id));
}

std::size_t WeightedGraph::edge_count() const {
  std::size_t m = 0;
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = i + 1; j < n(); ++j) m += adj[i][j];
  return m;
}

Rat WeightedGraph::total_weight() const {
  Rat t{0};
  for (const auto& w : weights) t += w;
  return t;
}

const char* problem_name(Problem p) {
  switch (p) {
    case Problem::WIS: return "wis";
    case Problem::WClique: return "clique";
    case Problem::Coloring: return "coloring";
    case Problem::CliqueCover: return "clique-cover";
  }
  return "?";
}

Problem problem_from_name(const std::string& s) {
  if (s == "wis") return Problem::WIS;
  if (s == "clique") return Problem::WClique;
  if (s == "coloring") return Problem::Coloring;
  if (s == "clique-cover") return Problem::CliqueCover;
  throw std::invalid_argument("unknown problem: " + s);
}

WeightedGraph build_intersection_graph(const Representation& rep) {
  WeightedGraph g;
  const std::size_t n = rep.objects.size();
  g.ids.reserve(n);
  g.weights.reserve(n);
  for (const auto& o : rep.objects) {
    g.ids.push_back(o.id);
    g.weights.push_back(o.weight);
  }
  g.adj.assign(n, std::vector<uint8_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (objects_intersect(rep.objects[i], rep.objects[j]))
        g.adj[i][j] = g.adj[j][i] = 1;
  return g;
}

WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<Id>& keep) {
  std::vector<std::size_t> idx;
  idx.reserve(keep.size());
  std::set<Id> wanted(keep.begin(), keep.end());
  if (wanted.size() != keep.size())
    throw std::invalid_argument("induced_subgraph: duplicate vertex id");
  for (std::size_t i = 0; i < g.n(); ++i)
    if (wanted.count(g.ids[i])) idx.push_back(i);
  if (idx.size() != keep.size())
    throw std::out_of_range("induced_subgraph: unknown vertex id");
  WeightedGraph out;
  for (std::size_t i : idx) {
    out.ids.push_back(g.ids[i]);
    out.weights.push_back(g.weights[i]);
  }
  out.adj.assign(idx.size(), std::vector<uint8_t>(idx.size(), 0));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      out.adj[a][b] = g.adj[idx[a]][idx[b]];
  return out;
}

WeightedGraph complement(const WeightedGraph& g) {
  WeightedGraph out = g;
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j)
      out.adj[i][j] = (i != j && !g.adj[i][j]) ? 1 : 0;
  return out;
}

bool solution_valid(const WeightedGraph& g, const Solution& s, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  switch (s.problem) {
    case Problem::WIS:
    case Problem::WClique: {
      std::vector<std::size_t> idx;
      std::set<Id> seen;
      for (Id id : s.vertex_set) {
        if (!seen.insert(id).second) return fail("duplicate vertex in payload");
        idx.push_back(g.index_of(id));
      }
      Rat total{0};
      for (std::size_t i : idx) total += g.weights[i];
      if (total != s.value) return fail("value does not match payload weight");
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
          bool e = g.has_edge(idx[a], idx[b]);
          if (s.problem == Problem::WIS && e) return fail("independent set contains an edge");
          if (s.problem == Problem::WClique && !e) return fail("clique misses an edge");
        }
      return true;
    }
    case Problem::Coloring: {
      if (s.coloring.size() != g.n()) return fail("coloring does not cover all vertices");
      std::map<Id, int> color;
      int max_color = 0;
      for (auto [id, c] : s.coloring) {
        if (c < 1) return fail("colors must be positive");
        if (!color.emplace(id, c).second) return fail("vertex colored twice");
        max_color = std::max(max_color, c);
      }
      for (std::size_t i = 0; i < g.n(); ++i)
        for (std::size_t j = i + 1; j < g.n(); ++j)
          if (g.has_edge(i, j) && color.at(g.ids[i]) == color.at(g.ids[j]))
            return fail("adjacent vertices share a color");
      if (s.value != Rat(max_color)) return fail("value does not match color count");
      return true;
    }
    case Problem::CliqueCover: {
      std::set<Id> covered;
      for (const auto& q : s.cliques) {
        std::vector<std::size_t> idx;
        for (Id id : q) {
          idx.push_back(g.index_of(id));
          if (!covered.insert(id).second) return fail("vertex covered twice");
        }
        for (std::size_t a = 0; a < idx.size(); ++a)
          for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (!g.has_edge(idx[a], idx[b])) return fail("cover set is not a clique");
      }
      if (covered.size() != g.n()) return fail("cover misses a vertex");
      if (s.value != Rat(static_cast<long long>(s.cliques.size())))
        return fail("value does not match clique count");
      return true;
    }
  }
  return fail("unknown problem tag");
}

}  // namespace vpg
