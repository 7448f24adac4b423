#include "vpg/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace vpg {

const char* cert_kind_name(const PartCertificate& c) {
  struct Namer {
    const char* operator()(const OuterstringCert&) { return "outerstring"; }
    const char* operator()(const CorneredCert&) { return "cornered"; }
    const char* operator()(const PermPairCert&) { return "permpair"; }
    const char* operator()(const Dim3Cert&) { return "dim3"; }
    const char* operator()(const CenteredCert&) { return "centered"; }
    const char* operator()(const GroundedCert&) { return "grounded"; }
    const char* operator()(const SingleVerticalPairCert&) { return "svpair"; }
  };
  return std::visit(Namer{}, c);
}

const char* bound_formula_name(BoundFormula f) {
  switch (f) {
    case BoundFormula::Log2N: return "log2n";
    case BoundFormula::TwoLog2N: return "2log2n";
    case BoundFormula::FourLog2N: return "4log2n";
    case BoundFormula::FourLog2Sq: return "4log2sqn";
    case BoundFormula::EightLog2Cube: return "8log2cbn";
  }
  return "?";
}

BoundFormula bound_formula_from_name(const std::string& s) {
  if (s == "log2n") return BoundFormula::Log2N;
  if (s == "2log2n") return BoundFormula::TwoLog2N;
  if (s == "4log2n") return BoundFormula::FourLog2N;
  if (s == "4log2sqn") return BoundFormula::FourLog2Sq;
  if (s == "8log2cbn") return BoundFormula::EightLog2Cube;
  throw std::invalid_argument("unknown bound formula: " + s);
}

bool within_bound(std::size_t count, std::size_t n, BoundFormula f) {
  if (count <= 1) return true;
  if (n <= 1) return count <= 1;
  const bool pow2 = (n & (n - 1)) == 0;
  unsigned k = 0;
  for (std::size_t m = n; m > 1; m >>= 1) ++k;  // floor(log2 n); exact if pow2
  switch (f) {
    case BoundFormula::Log2N:
      return count < 64 && (1ULL << count) <= n;
    case BoundFormula::TwoLog2N:
      return count < 120 &&
             (static_cast<unsigned __int128>(1) << count) <=
                 static_cast<unsigned __int128>(n) * n;
    case BoundFormula::FourLog2N:
      return count < 120 &&
             (static_cast<unsigned __int128>(1) << count) <=
                 static_cast<unsigned __int128>(n) * n *
                     (static_cast<unsigned __int128>(n) * n);
    case BoundFormula::FourLog2Sq:
      if (pow2) return count <= 4ULL * k * k;
      return static_cast<long double>(count) <=
             4.0L * std::pow(std::log2(static_cast<long double>(n)), 2.0L);
    case BoundFormula::EightLog2Cube:
      if (pow2) return count <= 8ULL * k * k * k;
      return static_cast<long double>(count) <=
             8.0L * std::pow(std::log2(static_cast<long double>(n)), 3.0L);
  }
  return false;
}

double bound_value(std::size_t n, BoundFormula f) {
  if (n <= 1) return 1.0;
  double l = std::log2(static_cast<double>(n));
  double v = 0;
  switch (f) {
    case BoundFormula::Log2N: v = l; break;
    case BoundFormula::TwoLog2N: v = 2 * l; break;
    case BoundFormula::FourLog2N: v = 4 * l; break;
    case BoundFormula::FourLog2Sq: v = 4 * l * l; break;
    case BoundFormula::EightLog2Cube: v = 8 * l * l * l; break;
  }
  return std::max(1.0, v);
}

namespace {

bool same_edges(const WeightedGraph& a, const WeightedGraph& b, std::string* why) {
  if (a.n() != b.n()) {
    if (why) *why = "vertex count differs";
    return false;
  }
  std::map<Id, std::size_t> bi;
  for (std::size_t i = 0; i < b.n(); ++i) bi[b.ids[i]] = i;
  for (std::size_t i = 0; i < a.n(); ++i) {
    auto it = bi.find(a.ids[i]);
    if (it == bi.end()) {
      if (why) *why = "vertex id mismatch";
      return false;
    }
  }
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = i + 1; j < a.n(); ++j) {
      bool ea = a.has_edge(i, j);
      bool eb = b.has_edge(bi.at(a.ids[i]), bi.at(a.ids[j]));
      if (ea != eb) {
        if (why)
          *why = "edge mismatch on pair (" + std::to_string(a.ids[i]) + "," +
                 std::to_string(a.ids[j]) + ")";
        return false;
      }
    }
  return true;
}

void check_pattern_preserved(const Representation& rep,
                             const std::vector<Id>& members,
                             const WeightedGraph& g, VerifyReport& out,
                             const std::string& what) {
  WeightedGraph transformed = build_intersection_graph(rep);
  WeightedGraph induced = induced_subgraph(g, members);
  std::string why;
  if (!same_edges(transformed, induced, &why))
    out.fail(what + ": intersection pattern not preserved (" + why + ")");
}

std::map<Id, std::size_t> order_positions(const std::vector<Id>& order,
                                          const std::vector<Id>& members,
                                          VerifyReport& out, const char* what) {
  std::map<Id, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!pos.emplace(order[i], i).second)
      out.fail(std::string(what) + " repeats id " + std::to_string(order[i]));
  if (order.size() != members.size())
    out.fail(std::string(what) + " is not a bijection on the part");
  for (Id id : members)
    if (!pos.count(id))
      out.fail(std::string(what) + " misses id " + std::to_string(id));
  return pos;
}

void check_disagreement_matches(const std::vector<std::vector<Id>>& orders,
                                const std::vector<Id>& members,
                                const WeightedGraph& g, VerifyReport& out) {
  std::vector<std::map<Id, std::size_t>> pos;
  for (std::size_t k = 0; k < orders.size(); ++k) {
    std::string what = "perm" + std::to_string(k + 1);
    pos.push_back(order_positions(orders[k], members, out, what.c_str()));
  }
  if (!out.pass()) return;
  WeightedGraph induced = induced_subgraph(g, members);
  for (std::size_t i = 0; i < induced.n(); ++i)
    for (std::size_t j = i + 1; j < induced.n(); ++j) {
      Id u = induced.ids[i], v = induced.ids[j];
      bool first = pos[0].at(u) < pos[0].at(v);
      bool disagree = false;
      for (std::size_t k = 1; k < pos.size(); ++k)
        if ((pos[k].at(u) < pos[k].at(v)) != first) disagree = true;
      if (disagree != induced.has_edge(i, j))
        out.fail("disagreement graph differs from induced subgraph on (" +
                 std::to_string(u) + "," + std::to_string(v) + ")");
    }
}

const Object* object_from(const Representation& rep, Id id) { return rep.find(id); }

struct CertVerifier {
  const Part& part;
  const Representation& original;
  const WeightedGraph& g;
  VerifyReport& out;

  void operator()(const OuterstringCert& c) {
    std::set<Id> seen;
    for (const auto& grp : c.groups) {
      const Representation* src = grp.rep_override ? &*grp.rep_override : &original;
      Line line{Orient::Vertical, grp.line_twice};
      for (Id id : grp.members) {
        if (!seen.insert(id).second)
          out.fail("groups overlap on id " + std::to_string(id));
        const Object* o = object_from(*src, id);
        if (!o) {
          out.fail("group member " + std::to_string(id) + " missing from geometry");
          continue;
        }
        if (!object_meets_line(*o, line))
          out.fail("member " + std::to_string(id) + " does not touch its ground line");
        Coord x2 = 2 * to_single_vertical(*o).x();
        bool ok_side = grp.side == OuterstringGroup::Side::Left
                           ? x2 < grp.line_twice
                           : x2 >= grp.line_twice;
        if (!ok_side)
          out.fail("member " + std::to_string(id) + " is on the wrong side of the line");
      }
      // Pairwise intersection points of a group stay on the group's side.
      for (std::size_t i = 0; i < grp.members.size(); ++i)
        for (std::size_t j = i + 1; j < grp.members.size(); ++j) {
          const Object* a = object_from(*src, grp.members[i]);
          const Object* b = object_from(*src, grp.members[j]);
          if (!a || !b) continue;
          for (const Point& p : object_pair_intersections(*a, *b)) {
            bool ok = grp.side == OuterstringGroup::Side::Left
                          ? 2 * p.x < grp.line_twice
                          : 2 * p.x >= grp.line_twice;
            if (!ok)
              out.fail("intersection of " + std::to_string(a->id) + " and " +
                       std::to_string(b->id) + " crosses the ground line");
          }
        }
      if (grp.rep_override) {
        for (const auto& o : grp.rep_override->objects)
          if (std::find(grp.members.begin(), grp.members.end(), o.id) ==
              grp.members.end())
            out.fail("override geometry carries a foreign id");
        check_pattern_preserved(*grp.rep_override, grp.members, g, out,
                                "outerstring group");
      }
    }
    std::vector<Id> all(seen.begin(), seen.end());
    if (all != part.members) out.fail("groups do not partition the part");
    // Distinct groups of one part never see each other.
    WeightedGraph induced = induced_subgraph(g, part.members);
    std::map<Id, std::size_t> grp_of;
    for (std::size_t k = 0; k < c.groups.size(); ++k)
      for (Id id : c.groups[k].members) grp_of[id] = k;
    for (std::size_t i = 0; i < induced.n(); ++i)
      for (std::size_t j = i + 1; j < induced.n(); ++j)
        if (induced.has_edge(i, j) &&
            grp_of.at(induced.ids[i]) != grp_of.at(induced.ids[j]))
          out.fail("edge between groups: " + std::to_string(induced.ids[i]) +
                   " and " + std::to_string(induced.ids[j]));
  }

  void operator()(const CorneredCert& c) {
    if (!part.rep) {
      out.fail("cornered part carries no geometry");
      return;
    }
    // Every member crosses both rays exactly once; the stored orders are the
    // ray orders; their disagreements are exactly the induced edges.
    std::vector<std::pair<Coord, Id>> along1;  // y of hit on the vertical ray
    std::vector<std::pair<Coord, Id>> along2;  // x of hit on the horizontal ray
    for (Id id : part.members) {
      const Object* o = object_from(*part.rep, id);
      if (!o) {
        out.fail("member " + std::to_string(id) + " missing from geometry");
        continue;
      }
      std::vector<Coord> hits1, hits2;
      for (const Segment& s : object_segments(*o)) {
        if (s.orient == Orient::Horizontal) {
          if (2 * s.lo <= c.apex_twice_x && c.apex_twice_x <= 2 * s.hi &&
              2 * s.at >= c.apex_twice_y)
            hits1.push_back(s.at);
        } else {
          bool on_ray2 = c.ray2_left ? 2 * s.at <= c.apex_twice_x
                                     : 2 * s.at >= c.apex_twice_x;
          if (on_ray2 && 2 * s.lo <= c.apex_twice_y && c.apex_twice_y <= 2 * s.hi)
            hits2.push_back(s.at);
        }
      }
      std::sort(hits1.begin(), hits1.end());
      hits1.erase(std::unique(hits1.begin(), hits1.end()), hits1.end());
      std::sort(hits2.begin(), hits2.end());
      hits2.erase(std::unique(hits2.begin(), hits2.end()), hits2.end());
      if (hits1.size() != 1)
        out.fail("member " + std::to_string(id) + " meets the vertical ray " +
                 std::to_string(hits1.size()) + " times");
      if (hits2.size() != 1)
        out.fail("member " + std::to_string(id) + " meets the horizontal ray " +
                 std::to_string(hits2.size()) + " times");
      if (hits1.size() == 1) along1.emplace_back(hits1[0], id);
      if (hits2.size() == 1) along2.emplace_back(hits2[0], id);
    }
    if (!out.pass()) return;
    auto dedup_sorted = [&](std::vector<std::pair<Coord, Id>>& v, bool asc,
                            const char* what) {
      std::sort(v.begin(), v.end());
      for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i].first == v[i - 1].first)
          out.fail(std::string("tie along ") + what);
      if (!asc) std::reverse(v.begin(), v.end());
    };
    dedup_sorted(along1, true, "the vertical ray");
    dedup_sorted(along2, !c.ray2_left, "the horizontal ray");
    if (!out.pass()) return;
    std::vector<Id> o1, o2;
    for (auto& [k, id] : along1) o1.push_back(id);
    for (auto& [k, id] : along2) o2.push_back(id);
    if (o1 != c.order1) out.fail("stored order along the vertical ray is wrong");
    if (o2 != c.order2) out.fail("stored order along the horizontal ray is wrong");
    check_disagreement_matches({c.order1, c.order2}, part.members, g, out);
  }

  void operator()(const PermPairCert& c) {
    check_disagreement_matches({c.order1, c.order2}, part.members, g, out);
  }

  void operator()(const Dim3Cert& c) {
    check_disagreement_matches({c.order1, c.order2, c.order3}, part.members, g, out);
  }

  void operator()(const CenteredCert& c) {
    if (!part.rep) {
      out.fail("centered part carries no geometry");
      return;
    }
    if (!part.rep->ref_line || !(*part.rep->ref_line == c.line))
      out.fail("part geometry does not carry the certificate line");
    for (Id id : part.members) {
      const Object* o = object_from(*part.rep, id);
      if (!o) {
        out.fail("member " + std::to_string(id) + " missing from geometry");
        continue;
      }
      if (!line_meets_segment(c.line, to_single_vertical(*o).vertical))
        out.fail("line misses the vertical segment of " + std::to_string(id));
    }
  }

  void operator()(const GroundedCert& c) {
    if (!part.rep) {
      out.fail("grounded part carries no geometry");
      return;
    }
    for (Id id : part.members) {
      const Object* o = object_from(*part.rep, id);
      if (!o) {
        out.fail("member " + std::to_string(id) + " missing from geometry");
        continue;
      }
      SingleVerticalObject sv = to_single_vertical(*o);
      if (!line_meets_segment(c.line, sv.vertical))
        out.fail("member " + std::to_string(id) + " does not reach the ground line");
      for (const auto& h : sv.horizontals)
        if (2 * h.at <= c.line.twice)
          out.fail("member " + std::to_string(id) +
                   " has a horizontal segment not above the ground line");
    }
  }

  void operator()(const SingleVerticalPairCert&) {
    if (!part.rep) {
      out.fail("single-vertical part carries no geometry");
      return;
    }
    ValidationReport v = validate_representation(*part.rep, RepClass::SingleVertical);
    for (const auto& viol : v.violations)
      out.fail("single-vertical check: " + viol.message);
  }
};

}  // namespace

VerifyReport verify_certificate(const Part& part, const Representation& original,
                                const WeightedGraph& g) {
  VerifyReport out;
  if (part.members.empty()) out.fail("empty part");
  if (!std::is_sorted(part.members.begin(), part.members.end()) ||
      std::adjacent_find(part.members.begin(), part.members.end()) !=
          part.members.end())
    out.fail("members must be strictly ascending");
  for (Id id : part.members)
    if (!original.find(id)) out.fail("unknown member id " + std::to_string(id));
  if (!out.pass()) return out;

  if (part.rep) {
    std::vector<Id> rep_ids;
    for (const auto& o : part.rep->objects) rep_ids.push_back(o.id);
    std::sort(rep_ids.begin(), rep_ids.end());
    if (rep_ids != part.members)
      out.fail("attached geometry ids differ from the member list");
    else
      check_pattern_preserved(*part.rep, part.members, g, out, "part geometry");
  }
  if (!out.pass()) return out;
  std::visit(CertVerifier{part, original, g, out}, part.cert);
  return out;
}

VerifyReport verify_decomposition(const Decomposition& d,
                                  const Representation& original,
                                  const WeightedGraph& g) {
  VerifyReport out;
  std::set<Id> seen;
  for (const auto& part : d.parts)
    for (Id id : part.members)
      if (!seen.insert(id).second)
        out.fail("vertex " + std::to_string(id) + " appears in two parts");
  if (seen.size() != g.n()) out.fail("parts do not cover every vertex");
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    VerifyReport r = verify_certificate(d.parts[i], original, g);
    for (auto& f : r.failures)
      out.fail("part " + std::to_string(i) + ": " + f);
  }
  return out;
}

WeightedGraph disagreement_graph_of_orders(const std::vector<std::vector<Id>>& orders,
                                           const WeightedGraph& g,
                                           const std::vector<Id>& members) {
  WeightedGraph induced = induced_subgraph(g, members);
  std::vector<std::map<Id, std::size_t>> pos;
  for (const auto& ord : orders) {
    std::map<Id, std::size_t> p;
    for (std::size_t i = 0; i < ord.size(); ++i) p[ord[i]] = i;
    pos.push_back(std::move(p));
  }
  WeightedGraph out = induced;
  for (auto& row : out.adj) std::fill(row.begin(), row.end(), 0);
  for (std::size_t i = 0; i < out.n(); ++i)
    for (std::size_t j = i + 1; j < out.n(); ++j) {
      Id u = out.ids[i], v = out.ids[j];
      bool first = pos[0].at(u) < pos[0].at(v);
      bool disagree = false;
      for (std::size_t k = 1; k < pos.size(); ++k)
        if ((pos[k].at(u) < pos[k].at(v)) != first) disagree = true;
      out.adj[i][j] = out.adj[j][i] = disagree ? 1 : 0;
    }
  return out;
}

}  // namespace vpg
