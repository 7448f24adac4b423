#include "vpg/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace vpg {

namespace {

struct SvoItem {
  Id id = 0;
  Rat weight{0};
  std::size_t orig = 0;
  SingleVerticalObject sv;
};

Object item_object(const SvoItem& it) {
  return Object{it.id, it.weight, it.sv};
}

std::vector<SvoItem> svo_items(const Representation& rep) {
  std::vector<SvoItem> items;
  items.reserve(rep.objects.size());
  for (std::size_t i = 0; i < rep.objects.size(); ++i) {
    const Object& o = rep.objects[i];
    items.push_back({o.id, o.weight, i, to_single_vertical(o)});
  }
  return items;
}

Representation rep_from_items(std::vector<SvoItem> items, RepFlags flags,
                              std::optional<Line> line) {
  std::sort(items.begin(), items.end(),
            [](const SvoItem& a, const SvoItem& b) { return a.orig < b.orig; });
  Representation rep;
  rep.flags = flags;
  rep.ref_line = line;
  for (auto& it : items) rep.objects.push_back(item_object(it));
  return rep;
}

std::vector<Id> sorted_ids(const std::vector<SvoItem>& items) {
  std::vector<Id> ids;
  for (const auto& it : items) ids.push_back(it.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool items_intersect(const SvoItem& a, const SvoItem& b) {
  return objects_intersect(item_object(a), item_object(b));
}

Coord item_min_x(const SvoItem& it) {
  Coord m = it.sv.vertical.at;
  for (const auto& h : it.sv.horizontals) m = std::min(m, h.lo);
  return m;
}

Coord item_max_x(const SvoItem& it) {
  Coord m = it.sv.vertical.at;
  for (const auto& h : it.sv.horizontals) m = std::max(m, h.hi);
  return m;
}

/// Half step left of the upper median of the given values.
Coord median_twice(std::vector<Coord> values) {
  std::sort(values.begin(), values.end());
  return 2 * values[values.size() / 2] - 1;
}

// ---------------------------------------------------------------------------
// Outerstring split
// ---------------------------------------------------------------------------

struct OsPart {
  std::vector<OuterstringGroup> groups;
};

OuterstringGroup singleton_group(const SvoItem& it) {
  return OuterstringGroup{2 * it.sv.x(), OuterstringGroup::Side::Right, {it.id}, {}};
}

OsPart outerstring_base2(const SvoItem& first, const SvoItem& second) {
  const SvoItem& a = first.sv.x() < second.sv.x() ? first : second;
  const SvoItem& b = first.sv.x() < second.sv.x() ? second : first;
  OsPart part;
  if (!items_intersect(a, b)) {
    part.groups.push_back(singleton_group(a));
    part.groups.push_back(singleton_group(b));
    return part;
  }
  std::vector<Id> members = {a.id, b.id};
  std::sort(members.begin(), members.end());
  // If the right object's horizontal reaches the left object's vertical, the
  // left column serves as the ground line and both objects stay untouched.
  for (const auto& h : b.sv.horizontals) {
    if (!segments_intersect(h, a.sv.vertical).empty()) {
      part.groups.push_back(OuterstringGroup{2 * a.sv.x(),
                                             OuterstringGroup::Side::Right,
                                             members,
                                             {}});
      return part;
    }
  }
  // Otherwise re-represent the pair on a canonical two-column layout.
  Representation canonical;
  std::vector<SvoItem> pair = {a, b};
  std::sort(pair.begin(), pair.end(),
            [](const SvoItem& p, const SvoItem& q) { return p.orig < q.orig; });
  for (const auto& it : pair) {
    bool left = it.id == a.id;
    SingleVerticalObject sv;
    sv.vertical = Segment::vertical(left ? 0 : 2, 0, 2);
    sv.horizontals.push_back(Segment::horizontal(left ? 1 : 2, 0, 2));
    canonical.objects.push_back(Object{it.id, it.weight, sv});
  }
  canonical.flags.single_vertical = true;
  part.groups.push_back(
      OuterstringGroup{0, OuterstringGroup::Side::Right, members, canonical});
  return part;
}

std::vector<OsPart> outerstring_rec(const std::vector<SvoItem>& items) {
  const std::size_t n = items.size();
  std::vector<OsPart> result;
  if (n == 0) return result;
  if (n == 1) {
    result.push_back(OsPart{{singleton_group(items[0])}});
    return result;
  }
  if (n == 2) {
    result.push_back(outerstring_base2(items[0], items[1]));
    return result;
  }

  std::vector<Coord> xs;
  for (const auto& it : items) xs.push_back(it.sv.x());
  const Coord m = median_twice(xs);
  const Line line{Orient::Vertical, m};

  std::vector<SvoItem> left, right, mid_left, mid_right;
  for (const auto& it : items) {
    bool crosses = object_meets_line(item_object(it), line);
    bool is_left = 2 * it.sv.x() < m;
    if (crosses)
      (is_left ? mid_left : mid_right).push_back(it);
    else
      (is_left ? left : right).push_back(it);
  }

  std::vector<OsPart> pl = outerstring_rec(left);
  std::vector<OsPart> pr = outerstring_rec(right);
  for (std::size_t i = 0; i < std::max(pl.size(), pr.size()); ++i) {
    OsPart merged;
    if (i < pl.size())
      merged.groups.insert(merged.groups.end(), pl[i].groups.begin(),
                           pl[i].groups.end());
    if (i < pr.size())
      merged.groups.insert(merged.groups.end(), pr[i].groups.begin(),
                           pr[i].groups.end());
    result.push_back(std::move(merged));
  }
  if (!mid_left.empty())
    result.push_back(OsPart{{OuterstringGroup{
        m, OuterstringGroup::Side::Left, sorted_ids(mid_left), {}}}});
  if (!mid_right.empty())
    result.push_back(OsPart{{OuterstringGroup{
        m, OuterstringGroup::Side::Right, sorted_ids(mid_right), {}}}});
  return result;
}

// ---------------------------------------------------------------------------
// Centered split
// ---------------------------------------------------------------------------

struct CentPart {
  std::vector<SvoItem> items;
  Coord line_twice = 1;
};

/// Canonical centered layout realizing any pattern on up to three objects,
/// with single-bend curves and one intersection point per adjacent pair.
CentPart centered_catalog(std::vector<SvoItem> items) {
  std::sort(items.begin(), items.end(),
            [](const SvoItem& a, const SvoItem& b) { return a.orig < b.orig; });
  const std::size_t n = items.size();
  bool e01 = n >= 2 && items_intersect(items[0], items[1]);
  bool e02 = n >= 3 && items_intersect(items[0], items[2]);
  bool e12 = n >= 3 && items_intersect(items[1], items[2]);

  static const Coord kCol[3] = {0, 4, 8};
  static const Coord kLo[3] = {-3, -2, -3};
  static const Coord kHi[3] = {2, 2, 1};
  for (std::size_t i = 0; i < n; ++i) {
    SingleVerticalObject sv;
    sv.vertical = Segment::vertical(kCol[i], kLo[i], kHi[i]);
    items[i].sv = sv;
  }
  if (e01) items[0].sv.horizontals.push_back(Segment::horizontal(2, 0, 4));
  if (e12) items[1].sv.horizontals.push_back(Segment::horizontal(-2, 4, 8));
  if (e02) items[2].sv.horizontals.push_back(Segment::horizontal(-3, 0, 8));
  return CentPart{std::move(items), 1};
}

CentPart centered_combine(CentPart below, const CentPart& above) {
  Coord shift_x = 0;
  if (!above.items.empty() && !below.items.empty()) {
    Coord max_above = item_max_x(above.items[0]);
    for (const auto& it : above.items) max_above = std::max(max_above, item_max_x(it));
    Coord min_below = item_min_x(below.items[0]);
    for (const auto& it : below.items) min_below = std::min(min_below, item_min_x(it));
    shift_x = max_above + 1 - min_below;
  }
  const Coord shift_y = (above.line_twice - below.line_twice) / 2;
  for (auto& it : below.items) {
    it.sv.vertical.at += shift_x;
    it.sv.vertical.lo += shift_y;
    it.sv.vertical.hi += shift_y;
    for (auto& h : it.sv.horizontals) {
      h.at += shift_y;
      h.lo += shift_x;
      h.hi += shift_x;
    }
  }
  CentPart merged;
  merged.line_twice = above.line_twice;
  merged.items = above.items;
  merged.items.insert(merged.items.end(), below.items.begin(), below.items.end());
  std::sort(merged.items.begin(), merged.items.end(),
            [](const SvoItem& a, const SvoItem& b) { return a.orig < b.orig; });
  return merged;
}

std::vector<CentPart> centered_rec(const std::vector<SvoItem>& items) {
  const std::size_t n = items.size();
  std::vector<CentPart> result;
  if (n == 0) return result;
  if (n <= 3) {
    result.push_back(centered_catalog(items));
    return result;
  }

  // Median over the 2n vertical endpoints, then the half-integer candidate
  // with the most balanced below/above object counts.
  std::set<Coord> endpoint_values;
  for (const auto& it : items) {
    endpoint_values.insert(it.sv.vertical.lo);
    endpoint_values.insert(it.sv.vertical.hi);
  }
  std::vector<Coord> candidates;
  for (Coord e : endpoint_values) {
    candidates.push_back(2 * e - 1);
    candidates.push_back(2 * e + 1);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  Coord best = 0;
  std::size_t best_max = n + 1;
  for (Coord t : candidates) {
    std::size_t below = 0, up = 0;
    for (const auto& it : items) {
      if (2 * it.sv.vertical.hi < t)
        ++below;
      else if (2 * it.sv.vertical.lo > t)
        ++up;
    }
    std::size_t mx = std::max(below, up);
    if (mx < best_max) {
      best_max = mx;
      best = t;
    }
  }
  if (best_max >= n)
    throw std::invalid_argument(
        "no admissible centering line: all vertical segments are degenerate "
        "at one height");

  std::vector<SvoItem> below, up, mid;
  for (const auto& it : items) {
    if (2 * it.sv.vertical.hi < best)
      below.push_back(it);
    else if (2 * it.sv.vertical.lo > best)
      up.push_back(it);
    else
      mid.push_back(it);
  }

  std::vector<CentPart> pb = centered_rec(below);
  std::vector<CentPart> pu = centered_rec(up);
  for (std::size_t i = 0; i < std::max(pb.size(), pu.size()); ++i) {
    if (i < pb.size() && i < pu.size())
      result.push_back(centered_combine(std::move(pb[i]), pu[i]));
    else if (i < pb.size())
      result.push_back(std::move(pb[i]));
    else
      result.push_back(std::move(pu[i]));
  }
  if (!mid.empty()) result.push_back(CentPart{mid, best});
  return result;
}

// ---------------------------------------------------------------------------
// Grounded -> cornered split
// ---------------------------------------------------------------------------

/// Normal-form item in the working frame where every curve opens rightward:
/// vertical [vlo,vtop] at x, horizontal [x,hend] at height vtop (hend == x
/// encodes a missing horizontal until normalization stretches it).
struct NfItem {
  Id id = 0;
  Rat weight{0};
  std::size_t orig = 0;
  Coord x = 0;
  Coord vlo = 0;
  Coord vtop = 0;
  Coord hend = 0;
};

struct NfPart {
  std::vector<NfItem> items;
};

Object nf_object(const NfItem& it) {
  SingleVerticalObject sv;
  sv.vertical = Segment::vertical(it.x, it.vlo, it.vtop);
  if (it.hend > it.x)
    sv.horizontals.push_back(Segment::horizontal(it.vtop, it.x, it.hend));
  return Object{it.id, it.weight, sv};
}

Coord line_floor(Coord line_twice) {
  // line_twice is odd; shift keeps the division exact.
  return (line_twice - 1) / 2;
}

void nf_extend_all(NfPart& part) {
  Coord mx = part.items[0].x;
  for (const auto& it : part.items) mx = std::max({mx, it.x, it.hend});
  const Coord stop = mx + 1;
  for (auto& it : part.items) it.hend = stop;
}

void nf_raise(NfItem& it, Coord dy, Coord floor_y) {
  it.vlo += dy;
  it.vtop += dy;
  it.vlo = std::min(it.vlo, floor_y);
}

NfPart nf_base2(NfItem a, NfItem b, Coord floor_y) {
  if (b.x < a.x) std::swap(a, b);
  bool edge = objects_intersect(nf_object(a), nf_object(b));
  if (edge) {
    if (a.vtop == b.vtop) nf_raise(b, 1, floor_y);
  } else {
    if (a.vtop <= b.vtop) nf_raise(a, b.vtop + 1 - a.vtop, floor_y);
  }
  NfPart part{{a, b}};
  std::sort(part.items.begin(), part.items.end(),
            [](const NfItem& p, const NfItem& q) { return p.orig < q.orig; });
  nf_extend_all(part);
  return part;
}

NfPart nf_combine(NfPart left, NfPart right, Coord floor_y) {
  Coord max_top_right = right.items[0].vtop;
  for (const auto& it : right.items) max_top_right = std::max(max_top_right, it.vtop);
  Coord min_top_left = left.items[0].vtop;
  for (const auto& it : left.items) min_top_left = std::min(min_top_left, it.vtop);
  const Coord dy = std::max<Coord>(0, max_top_right + 1 - min_top_left);
  for (auto& it : left.items) nf_raise(it, dy, floor_y);
  NfPart merged;
  merged.items = std::move(left.items);
  merged.items.insert(merged.items.end(), right.items.begin(), right.items.end());
  std::sort(merged.items.begin(), merged.items.end(),
            [](const NfItem& p, const NfItem& q) { return p.orig < q.orig; });
  nf_extend_all(merged);
  return merged;
}

std::vector<NfPart> cornered_rec(const std::vector<NfItem>& items, Coord line_twice) {
  const Coord floor_y = line_floor(line_twice);
  const std::size_t n = items.size();
  std::vector<NfPart> result;
  if (n == 0) return result;
  if (n == 1) {
    NfPart part{{items[0]}};
    part.items[0].vlo = std::min(part.items[0].vlo, floor_y);
    nf_extend_all(part);
    result.push_back(std::move(part));
    return result;
  }
  if (n == 2) {
    result.push_back(nf_base2(items[0], items[1], floor_y));
    return result;
  }

  std::vector<Coord> xs;
  for (const auto& it : items) xs.push_back(it.x);
  const Coord m = median_twice(xs);

  std::vector<NfItem> left, right, mid;
  for (const auto& it : items) {
    if (2 * it.x > m) {
      right.push_back(it);
    } else if (2 * it.hend > m) {
      mid.push_back(it);
    } else {
      left.push_back(it);
    }
  }

  std::vector<NfPart> pl = cornered_rec(left, line_twice);
  std::vector<NfPart> pr = cornered_rec(right, line_twice);
  for (std::size_t i = 0; i < std::max(pl.size(), pr.size()); ++i) {
    if (i < pl.size() && i < pr.size())
      result.push_back(nf_combine(std::move(pl[i]), std::move(pr[i]), floor_y));
    else if (i < pl.size())
      result.push_back(std::move(pl[i]));
    else
      result.push_back(std::move(pr[i]));
  }
  if (!mid.empty()) {
    NfPart part{mid};
    nf_extend_all(part);
    result.push_back(std::move(part));
  }
  return result;
}

/// Builds the final Part for one normal-form set. `mirrored` maps the working
/// frame back through x -> -x (the right-opening class).
Part assemble_cornered_part(const NfPart& nf, Coord line_twice, bool mirrored) {
  Part part;
  const Coord stop = nf.items[0].hend;  // common column after normalization
  Representation rep;
  rep.flags.b1 = true;
  rep.flags.single_vertical = true;
  rep.flags.grounded = true;
  rep.ref_line = Line{Orient::Horizontal, line_twice};
  std::vector<const NfItem*> by_orig;
  for (const auto& it : nf.items) by_orig.push_back(&it);
  std::sort(by_orig.begin(), by_orig.end(),
            [](const NfItem* a, const NfItem* b) { return a->orig < b->orig; });
  for (const NfItem* it : by_orig) {
    SingleVerticalObject sv;
    if (!mirrored) {
      sv.vertical = Segment::vertical(it->x, it->vlo, it->vtop);
      sv.horizontals.push_back(Segment::horizontal(it->vtop, it->x, it->hend));
    } else {
      sv.vertical = Segment::vertical(-it->x, it->vlo, it->vtop);
      sv.horizontals.push_back(Segment::horizontal(it->vtop, -it->hend, -it->x));
    }
    rep.objects.push_back(Object{it->id, it->weight, sv});
    part.members.push_back(it->id);
  }
  std::sort(part.members.begin(), part.members.end());

  CorneredCert cert;
  cert.apex_twice_y = line_twice;
  cert.apex_twice_x = mirrored ? -2 * stop : 2 * stop;
  cert.ray2_left = !mirrored;
  std::vector<const NfItem*> order = by_orig;
  std::sort(order.begin(), order.end(), [](const NfItem* a, const NfItem* b) {
    return a->vtop < b->vtop;
  });
  for (const NfItem* it : order) cert.order1.push_back(it->id);
  std::sort(order.begin(), order.end(), [&](const NfItem* a, const NfItem* b) {
    return mirrored ? -a->x < -b->x : a->x > b->x;  // outward along the ray
  });
  for (const NfItem* it : order) cert.order2.push_back(it->id);
  part.cert = cert;
  part.rep = std::move(rep);
  return part;
}

struct GroundedClasses {
  std::vector<NfItem> opens_right;  // |h, in the original frame
  std::vector<NfItem> opens_left;   // h|, stored mirrored (x -> -x)
};

GroundedClasses classify_grounded(const Representation& rep, Coord line_twice) {
  GroundedClasses out;
  std::vector<SvoItem> items = svo_items(rep);
  for (const auto& it : items) {
    const Segment& v = it.sv.vertical;
    if (!(2 * v.lo < line_twice && line_twice < 2 * v.hi))
      throw std::invalid_argument("not grounded: object " + std::to_string(it.id) +
                                  " does not cross the ground line");
    if (it.sv.horizontals.size() > 1)
      throw std::invalid_argument("not grounded: object " + std::to_string(it.id) +
                                  " is not a 1-bend curve");
    NfItem nf;
    nf.id = it.id;
    nf.weight = it.weight;
    nf.orig = it.orig;
    nf.x = v.at;
    nf.vlo = v.lo;
    nf.vtop = v.hi;
    nf.hend = v.at;
    bool left_opening = false;
    if (!it.sv.horizontals.empty()) {
      const Segment& h = it.sv.horizontals[0];
      if (2 * h.at <= line_twice)
        throw std::invalid_argument("not grounded: horizontal of object " +
                                    std::to_string(it.id) + " is not above the line");
      if (h.at != v.hi || (h.lo != v.at && h.hi != v.at))
        throw std::invalid_argument("not grounded: horizontal of object " +
                                    std::to_string(it.id) +
                                    " is not attached at the vertical's top");
      if (h.hi > v.at && h.lo < v.at)
        throw std::invalid_argument("not grounded: horizontal of object " +
                                    std::to_string(it.id) + " crosses its vertical");
      if (h.lo < v.at) {
        left_opening = true;
        nf.hend = -h.lo;  // mirrored frame
      } else {
        nf.hend = h.hi;
      }
    }
    if (left_opening) {
      nf.x = -nf.x;
      out.opens_left.push_back(nf);
    } else {
      out.opens_right.push_back(nf);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cell orders for the centered -> dim-3 construction
// ---------------------------------------------------------------------------

/// Normalized top order of `cell` members inside one cornered part, arranged
/// so that its disagreements with ascending-x are exactly the part's edges.
std::vector<Id> normalized_top_order(const Part& cornered, const std::set<Id>& cell) {
  const CorneredCert& cert = std::get<CorneredCert>(cornered.cert);
  std::vector<std::pair<Coord, Id>> tops;
  for (const auto& o : cornered.rep->objects) {
    if (!cell.count(o.id)) continue;
    tops.emplace_back(to_single_vertical(o).vertical.hi, o.id);
  }
  std::sort(tops.begin(), tops.end());
  if (cert.ray2_left) std::reverse(tops.begin(), tops.end());
  std::vector<Id> out;
  for (auto& [top, id] : tops) out.push_back(id);
  return out;
}

Representation restrict_rep(const Representation& rep, const std::set<Id>& keep) {
  Representation out;
  out.flags = rep.flags;
  out.ref_line = rep.ref_line;
  for (const auto& o : rep.objects)
    if (keep.count(o.id)) out.objects.push_back(o);
  return out;
}

void require_one_string(const Representation& rep, const char* what) {
  for (std::size_t i = 0; i < rep.objects.size(); ++i)
    for (std::size_t j = i + 1; j < rep.objects.size(); ++j)
      if (object_pair_intersections(rep.objects[i], rep.objects[j]).size() > 1)
        throw std::invalid_argument(
            std::string(what) + ": objects " +
            std::to_string(rep.objects[i].id) + " and " +
            std::to_string(rep.objects[j].id) + " intersect more than once");
}

void require_valid(const Representation& rep, RepClass c, const char* what) {
  ValidationReport r = validate_representation(rep, c);
  if (!r.ok())
    throw std::invalid_argument(std::string(what) + ": " + r.violations[0].message);
}

}  // namespace

Line median_x(const Representation& rep) {
  if (rep.objects.empty())
    throw std::invalid_argument("median of an empty representation");
  std::vector<Coord> xs;
  for (const auto& it : svo_items(rep)) xs.push_back(it.sv.x());
  return Line{Orient::Vertical, median_twice(xs)};
}

Decomposition split_single_vertical_outerstring(const Representation& rep) {
  require_valid(rep, RepClass::SingleVertical, "outerstring split");
  Decomposition d;
  d.strategy = "outerstring";
  d.n = rep.size();
  d.bound = BoundFormula::TwoLog2N;
  for (OsPart& os : outerstring_rec(svo_items(rep))) {
    Part part;
    std::vector<Id> members;
    for (const auto& grp : os.groups)
      members.insert(members.end(), grp.members.begin(), grp.members.end());
    std::sort(members.begin(), members.end());
    part.members = std::move(members);
    part.cert = OuterstringCert{std::move(os.groups)};
    d.parts.push_back(std::move(part));
  }
  return d;
}

B2SplitResult split_b2_by_vertical_count(const Representation& rep) {
  require_valid(rep, RepClass::B2, "b2 split");
  B2SplitResult out;
  RepFlags flags;
  flags.b2 = true;
  flags.single_vertical = true;
  flags.one_string = rep.flags.one_string;
  out.straight.flags = flags;
  out.rotated.flags = flags;
  for (const auto& o : rep.objects) {
    int verticals = 0;
    if (const auto* c = std::get_if<OrthoCurve>(&o.geom))
      verticals = c->vertical_count();
    else
      verticals = 1;
    if (verticals <= 1) {
      out.straight.objects.push_back(Object{o.id, o.weight, to_single_vertical(o)});
    } else {
      Representation one;
      one.objects.push_back(o);
      one = apply_transform(one, Transform{Transform::Rotate90});
      out.rotated.objects.push_back(
          Object{o.id, o.weight, to_single_vertical(one.objects[0])});
    }
  }
  return out;
}

Decomposition split_to_centered(const Representation& rep) {
  require_valid(rep, RepClass::SingleVertical, "centered split");
  Decomposition d;
  d.strategy = "centered";
  d.n = rep.size();
  d.bound = BoundFormula::Log2N;
  RepFlags flags = rep.flags;
  flags.single_vertical = true;
  flags.centered = true;
  for (CentPart& cp : centered_rec(svo_items(rep))) {
    Part part;
    part.members = sorted_ids(cp.items);
    part.cert = CenteredCert{Line{Orient::Horizontal, cp.line_twice}};
    part.rep = rep_from_items(std::move(cp.items), flags,
                              Line{Orient::Horizontal, cp.line_twice});
    d.parts.push_back(std::move(part));
  }
  return d;
}

CutResult cut_at_center(const Representation& rep) {
  require_valid(rep, RepClass::Centered, "cut at center");
  const Line line = *rep.ref_line;
  const Coord t = line.twice;
  const Coord fl = line_floor(t);
  CutResult cut;
  cut.cut_line = line;
  RepFlags flags;
  flags.b1 = true;
  flags.single_vertical = true;
  flags.grounded = true;
  cut.upper.flags = flags;
  cut.upper.ref_line = line;
  cut.lower.flags = flags;
  cut.lower.ref_line = Line{Orient::Horizontal, -t};

  Representation lower_unrotated;  // working copy for the edge records
  for (const auto& o : rep.objects) {
    SingleVerticalObject sv = to_single_vertical(o);
    SingleVerticalObject up, down;
    up.vertical = Segment::vertical(sv.vertical.at, fl, sv.vertical.hi);
    down.vertical = Segment::vertical(sv.vertical.at, sv.vertical.lo, fl + 1);
    for (const auto& h : sv.horizontals)
      (2 * h.at > t ? up : down).horizontals.push_back(h);
    cut.upper.objects.push_back(Object{o.id, o.weight, up});
    lower_unrotated.objects.push_back(Object{o.id, o.weight, down});
  }
  cut.lower = lower_unrotated;
  cut.lower = apply_transform(cut.lower, Transform{Transform::MirrorX});
  for (auto& o : cut.lower.objects) {  // mirror-y completes the half turn
    auto& sv = std::get<SingleVerticalObject>(o.geom);
    sv.vertical = Segment::vertical(sv.vertical.at, -sv.vertical.hi, -sv.vertical.lo);
    for (auto& h : sv.horizontals) h = Segment::horizontal(-h.at, h.lo, h.hi);
  }
  cut.lower.flags = flags;
  cut.lower.ref_line = Line{Orient::Horizontal, -t};

  for (std::size_t i = 0; i < rep.objects.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.objects.size(); ++j) {
      if (!objects_intersect(rep.objects[i], rep.objects[j])) continue;
      EdgeSideRecord rec;
      rec.u = rep.objects[i].id;
      rec.v = rep.objects[j].id;
      rec.above = objects_intersect(cut.upper.objects[i], cut.upper.objects[j]);
      rec.below =
          objects_intersect(lower_unrotated.objects[i], lower_unrotated.objects[j]);
      if (!rec.above && !rec.below)
        throw std::logic_error("cut lost an edge between " + std::to_string(rec.u) +
                               " and " + std::to_string(rec.v));
      cut.edges.push_back(rec);
    }
  }
  return cut;
}

Decomposition split_grounded_to_cornered(const Representation& rep) {
  if (!rep.ref_line || rep.ref_line->axis != Orient::Horizontal)
    throw std::invalid_argument("not grounded: missing horizontal reference line");
  const Coord t = rep.ref_line->twice;
  Decomposition d;
  d.strategy = "grounded-cornered";
  d.n = rep.size();
  d.bound = BoundFormula::TwoLog2N;
  if (rep.objects.empty()) return d;

  GroundedClasses classes = classify_grounded(rep, t);
  if (rep.size() <= 4) {
    // Tiny inputs become singleton parts: one 1-bend curve is always cornered.
    std::vector<std::pair<std::size_t, Part>> parts;
    for (const auto& nf : classes.opens_right) {
      std::vector<NfPart> one = cornered_rec({nf}, t);
      parts.emplace_back(nf.orig, assemble_cornered_part(one[0], t, false));
    }
    for (const auto& nf : classes.opens_left) {
      std::vector<NfPart> one = cornered_rec({nf}, t);
      parts.emplace_back(nf.orig, assemble_cornered_part(one[0], t, true));
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [orig, part] : parts) d.parts.push_back(std::move(part));
    return d;
  }
  for (NfPart& nf : cornered_rec(classes.opens_right, t))
    d.parts.push_back(assemble_cornered_part(nf, t, false));
  for (NfPart& nf : cornered_rec(classes.opens_left, t))
    d.parts.push_back(assemble_cornered_part(nf, t, true));
  return d;
}

PermPairCert cornered_permutations(const Part& part) {
  if (!std::holds_alternative<CorneredCert>(part.cert))
    throw std::invalid_argument("part does not carry a cornered certificate");
  if (!part.rep) throw std::invalid_argument("cornered part carries no geometry");
  const CorneredCert& c = std::get<CorneredCert>(part.cert);
  std::vector<std::pair<Coord, Id>> along1, along2;
  for (const auto& o : part.rep->objects) {
    std::vector<Coord> hits1, hits2;
    for (const Segment& s : object_segments(o)) {
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
    auto uniq = [](std::vector<Coord>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(hits1);
    uniq(hits2);
    if (hits1.size() != 1 || hits2.size() != 1)
      throw std::invalid_argument("object " + std::to_string(o.id) +
                                  " does not meet both rays exactly once");
    along1.emplace_back(hits1[0], o.id);
    along2.emplace_back(hits2[0], o.id);
  }
  auto order_by = [](std::vector<std::pair<Coord, Id>>& v, bool asc) {
    std::sort(v.begin(), v.end());
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i].first == v[i - 1].first)
        throw std::invalid_argument("tie along a ray (general position violated)");
    if (!asc) std::reverse(v.begin(), v.end());
  };
  order_by(along1, true);
  order_by(along2, !c.ray2_left);
  PermPairCert out;
  for (auto& [k, id] : along1) out.order1.push_back(id);
  for (auto& [k, id] : along2) out.order2.push_back(id);
  return out;
}

Decomposition centered_to_parts(const Representation& rep, bool onestring) {
  require_valid(rep, RepClass::Centered, "centered_to_parts");
  if (onestring) require_one_string(rep, "centered_to_parts");
  Decomposition d;
  d.strategy = onestring ? "permutation" : "cocomp";
  d.n = rep.size();
  d.bound = BoundFormula::FourLog2Sq;
  if (rep.objects.empty()) return d;

  CutResult cut = cut_at_center(rep);
  Decomposition upper = split_grounded_to_cornered(cut.upper);
  Decomposition lower = split_grounded_to_cornered(cut.lower);
  d.edge_partition = cut.edges;

  std::map<Id, std::size_t> cell_up, cell_down;
  for (std::size_t i = 0; i < upper.parts.size(); ++i)
    for (Id id : upper.parts[i].members) cell_up[id] = i;
  for (std::size_t j = 0; j < lower.parts.size(); ++j)
    for (Id id : lower.parts[j].members) cell_down[id] = j;

  std::map<Id, Coord> original_x;
  for (const auto& it : svo_items(rep)) original_x[it.id] = it.sv.x();

  std::map<std::pair<std::size_t, std::size_t>, std::set<Id>> cells;
  for (const auto& o : rep.objects)
    cells[{cell_up.at(o.id), cell_down.at(o.id)}].insert(o.id);

  for (const auto& [key, cell] : cells) {
    const Part& up_part = upper.parts[key.first];
    const Part& down_part = lower.parts[key.second];
    std::vector<Id> pi1 = normalized_top_order(up_part, cell);
    std::vector<Id> pi3 = normalized_top_order(down_part, cell);
    std::reverse(pi3.begin(), pi3.end());  // the lower frame is a half turn
    std::vector<std::pair<Coord, Id>> xs;
    for (Id id : cell) xs.emplace_back(original_x.at(id), id);
    std::sort(xs.begin(), xs.end());
    std::vector<Id> pi2;
    for (auto& [x, id] : xs) pi2.push_back(id);

    Part part;
    part.members.assign(cell.begin(), cell.end());
    if (onestring)
      part.cert = PermPairCert{pi1, pi3};
    else
      part.cert = Dim3Cert{pi1, pi2, pi3};
    part.rep = restrict_rep(rep, cell);
    d.parts.push_back(std::move(part));
  }
  return d;
}

Decomposition decompose_b2_full(const Representation& rep, bool onestring) {
  require_valid(rep, onestring ? RepClass::B2OneString : RepClass::B2,
                "decompose_b2_full");
  Decomposition d;
  d.strategy = "b2-full";
  d.n = rep.size();
  d.bound = BoundFormula::EightLog2Cube;
  B2SplitResult halves = split_b2_by_vertical_count(rep);
  for (const Representation* half : {&halves.straight, &halves.rotated}) {
    if (half->objects.empty()) continue;
    Decomposition centered = split_to_centered(*half);
    for (const Part& cpart : centered.parts) {
      Decomposition sub = centered_to_parts(*cpart.rep, onestring);
      for (Part& p : sub.parts) d.parts.push_back(std::move(p));
    }
  }
  return d;
}

Decomposition decompose_b1_full(const Representation& rep) {
  require_valid(rep, RepClass::B1, "decompose_b1_full");
  Decomposition d;
  d.strategy = "b1-full";
  d.n = rep.size();
  d.bound = BoundFormula::FourLog2Sq;
  if (rep.objects.empty()) return d;

  Decomposition centered = split_to_centered(rep);
  for (const Part& cpart : centered.parts) {
    const Representation& crep = *cpart.rep;
    const Coord t = crep.ref_line->twice;
    // Vertex split: horizontal above the centering line (or absent) vs below.
    Representation above, below;
    above.flags = crep.flags;
    above.flags.grounded = true;
    above.ref_line = crep.ref_line;
    for (const auto& o : crep.objects) {
      SingleVerticalObject sv = to_single_vertical(o);
      bool is_above = sv.horizontals.empty() || 2 * sv.horizontals[0].at > t;
      (is_above ? above : below).objects.push_back(o);
    }
    std::vector<std::pair<bool, Decomposition>> sides;
    if (!above.objects.empty())
      sides.emplace_back(false, split_grounded_to_cornered(above));
    if (!below.objects.empty()) {
      Representation turned;
      turned.objects = below.objects;
      turned = apply_transform(turned, Transform{Transform::MirrorX});
      for (auto& o : turned.objects) {
        auto sv = to_single_vertical(o);
        sv.vertical =
            Segment::vertical(sv.vertical.at, -sv.vertical.hi, -sv.vertical.lo);
        for (auto& h : sv.horizontals) h = Segment::horizontal(-h.at, h.lo, h.hi);
        o.geom = sv;
      }
      turned.flags = crep.flags;
      turned.flags.grounded = true;
      turned.ref_line = Line{Orient::Horizontal, -t};
      sides.emplace_back(true, split_grounded_to_cornered(turned));
    }
    for (auto& [rotated, sub] : sides) {
      for (Part& gpart : sub.parts) {
        PermPairCert perms = cornered_permutations(gpart);
        Part out;
        out.members = gpart.members;
        out.cert = perms;
        out.rep = gpart.rep;
        d.parts.push_back(std::move(out));
      }
    }
  }
  return d;
}

}  // namespace vpg
