#include "vpg/approx.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vpg/perm.hpp"

namespace vpg {

namespace {

bool needs_b2_route(const Representation& rep) {
  for (const auto& o : rep.objects)
    if (const auto* c = std::get_if<OrthoCurve>(&o.geom))
      if (c->vertical_count() > 1) return true;
  return false;
}

PermInstance instance_from_orders(const WeightedGraph& g,
                                  const std::vector<Id>& members,
                                  const std::vector<Id>& o1,
                                  const std::vector<Id>& o2) {
  WeightedGraph sub = induced_subgraph(g, members);
  PermInstance inst;
  inst.ids = sub.ids;
  inst.weights = sub.weights;
  inst.perm1 = o1;
  inst.perm2 = o2;
  return inst;
}

Dim3Instance instance_from_orders3(const WeightedGraph& g,
                                   const std::vector<Id>& members,
                                   const Dim3Cert& c) {
  WeightedGraph sub = induced_subgraph(g, members);
  Dim3Instance inst;
  inst.ids = sub.ids;
  inst.weights = sub.weights;
  inst.perm1 = c.order1;
  inst.perm2 = c.order2;
  inst.perm3 = c.order3;
  return inst;
}

}  // namespace

ApproxResult approx_wis(const Representation& rep, std::size_t solver_cap) {
  ApproxResult res;
  res.solution.problem = Problem::WIS;
  if (rep.objects.empty()) return res;

  std::vector<Decomposition> decs;
  if (needs_b2_route(rep)) {
    B2SplitResult halves = split_b2_by_vertical_count(rep);
    if (!halves.straight.objects.empty())
      decs.push_back(split_single_vertical_outerstring(halves.straight));
    if (!halves.rotated.objects.empty())
      decs.push_back(split_single_vertical_outerstring(halves.rotated));
    res.factor_formula = BoundFormula::FourLog2N;
  } else {
    decs.push_back(split_single_vertical_outerstring(rep));
    res.factor_formula = BoundFormula::TwoLog2N;
  }

  WeightedGraph g = build_intersection_graph(rep);
  Solution best;
  best.problem = Problem::WIS;
  bool first = true;
  for (const auto& d : decs) {
    for (const auto& part : d.parts) {
      ++res.parts_used;
      WeightedGraph induced = induced_subgraph(g, part.members);
      Solution sol = outerstring_mwis(part, induced, solver_cap);
      if (first || sol.value > best.value) {
        best = sol;
        first = false;
      }
      res.per_part.push_back(std::move(sol));
    }
  }
  res.solution = best;
  return res;
}

ApproxResult approx_weighted_clique(const Representation& rep, bool onestring) {
  ApproxResult res;
  res.solution.problem = Problem::WClique;
  if (rep.objects.empty()) return res;

  Decomposition d;
  if (rep.flags.b1 && !needs_b2_route(rep)) {
    d = decompose_b1_full(rep);
    res.factor_formula = BoundFormula::FourLog2Sq;
  } else {
    d = decompose_b2_full(rep, onestring);
    res.factor_formula = BoundFormula::EightLog2Cube;
  }

  WeightedGraph g = build_intersection_graph(rep);
  Solution best;
  best.problem = Problem::WClique;
  bool first = true;
  for (const auto& part : d.parts) {
    ++res.parts_used;
    Solution sol;
    if (const auto* pp = std::get_if<PermPairCert>(&part.cert)) {
      sol = perm_max_weight_clique(
          instance_from_orders(g, part.members, pp->order1, pp->order2));
    } else if (const auto* d3 = std::get_if<Dim3Cert>(&part.cert)) {
      sol = dim3_max_weight_clique(instance_from_orders3(g, part.members, *d3));
    } else {
      throw std::logic_error("unexpected certificate kind in clique pipeline");
    }
    if (first || sol.value > best.value) {
      best = sol;
      first = false;
    }
    res.per_part.push_back(std::move(sol));
  }
  res.solution = best;
  return res;
}

ApproxResult approx_clique_cover(const Representation& rep, bool onestring) {
  ApproxResult res;
  res.solution.problem = Problem::CliqueCover;
  if (rep.objects.empty()) return res;

  Decomposition d;
  if (rep.flags.b1 && !needs_b2_route(rep)) {
    d = decompose_b1_full(rep);
    res.factor_formula = BoundFormula::FourLog2Sq;
  } else {
    d = decompose_b2_full(rep, onestring);
    res.factor_formula = BoundFormula::EightLog2Cube;
  }

  WeightedGraph g = build_intersection_graph(rep);
  for (const auto& part : d.parts) {
    ++res.parts_used;
    Solution part_cover;
    part_cover.problem = Problem::CliqueCover;
    if (const auto* pp = std::get_if<PermPairCert>(&part.cert)) {
      part_cover = perm_min_clique_cover(
          instance_from_orders(g, part.members, pp->order1, pp->order2));
    } else if (const auto* d3 = std::get_if<Dim3Cert>(&part.cert)) {
      // Greedy antichain peeling; each peeled antichain is one clique.
      std::set<Id> remaining(part.members.begin(), part.members.end());
      while (!remaining.empty()) {
        std::vector<Id> live(remaining.begin(), remaining.end());
        Dim3Instance inst;
        inst.ids = live;
        inst.weights.assign(live.size(), Rat(1));
        auto restrict_order = [&](const std::vector<Id>& ord) {
          std::vector<Id> out;
          for (Id id : ord)
            if (remaining.count(id)) out.push_back(id);
          return out;
        };
        inst.perm1 = restrict_order(d3->order1);
        inst.perm2 = restrict_order(d3->order2);
        inst.perm3 = restrict_order(d3->order3);
        Solution anti = dim3_max_weight_clique(inst);
        if (anti.vertex_set.empty())
          throw std::logic_error("antichain peeling stalled");
        part_cover.cliques.push_back(anti.vertex_set);
        for (Id id : anti.vertex_set) remaining.erase(id);
      }
      part_cover.value = Rat(static_cast<long long>(part_cover.cliques.size()));
    } else {
      throw std::logic_error("unexpected certificate kind in cover pipeline");
    }
    for (const auto& q : part_cover.cliques) res.solution.cliques.push_back(q);
    res.per_part.push_back(std::move(part_cover));
  }
  res.solution.value =
      Rat(static_cast<long long>(res.solution.cliques.size()));
  return res;
}

ApproxResult approx_coloring(
    const Representation& rep,
    const std::function<Solution(const Representation&)>& is_solver,
    std::size_t solver_cap) {
  ApproxResult res;
  res.solution.problem = Problem::Coloring;
  res.factor_formula = BoundFormula::TwoLog2N;

  std::function<Solution(const Representation&)> solver = is_solver;
  std::size_t* rounds_sink = &res.parts_used;
  if (!solver) {
    solver = [solver_cap, rounds_sink](const Representation& r) {
      Representation unit = r;
      for (auto& o : unit.objects) o.weight = Rat(1);
      ApproxResult sub = approx_wis(unit, solver_cap);
      *rounds_sink = std::max(*rounds_sink, sub.parts_used);
      return sub.solution;
    };
  }

  Representation remaining = rep;
  int color = 0;
  while (!remaining.objects.empty()) {
    Solution is = solver(remaining);
    if (is.vertex_set.empty())
      throw std::logic_error("independent-set solver returned an empty set");
    ++color;
    res.audit_rounds.push_back(is.vertex_set.size());
    std::set<Id> chosen(is.vertex_set.begin(), is.vertex_set.end());
    for (Id id : is.vertex_set) res.solution.coloring.emplace_back(id, color);
    Representation next;
    next.flags = remaining.flags;
    next.ref_line = remaining.ref_line;
    for (const auto& o : remaining.objects)
      if (!chosen.count(o.id)) next.objects.push_back(o);
    remaining = std::move(next);
  }
  std::sort(res.solution.coloring.begin(), res.solution.coloring.end());
  res.solution.value = Rat(color);
  return res;
}

}  // namespace vpg
