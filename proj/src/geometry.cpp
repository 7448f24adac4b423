#include "vpg/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vpg {

SegHit segments_intersect(const Segment& a, const Segment& b) {
  SegHit hit;
  if (a.orient != b.orient) {
    const Segment& h = a.orient == Orient::Horizontal ? a : b;
    const Segment& v = a.orient == Orient::Horizontal ? b : a;
    if (h.lo <= v.at && v.at <= h.hi && v.lo <= h.at && h.at <= v.hi) {
      hit.kind = SegHit::At;
      hit.p = Point{v.at, h.at};
    }
    return hit;
  }
  if (a.at != b.at) return hit;
  Coord lo = std::max(a.lo, b.lo);
  Coord hi = std::min(a.hi, b.hi);
  if (lo > hi) return hit;
  if (lo == hi) {
    hit.kind = SegHit::At;
    hit.p = a.orient == Orient::Horizontal ? Point{lo, a.at} : Point{a.at, lo};
  } else {
    hit.kind = SegHit::Overlap;
    hit.overlap = Segment{a.orient, a.at, lo, hi};
  }
  return hit;
}

int OrthoCurve::vertical_count() const {
  int k = 0;
  for (const auto& s : segments)
    if (s.orient == Orient::Vertical) ++k;
  return k;
}

OrthoCurve OrthoCurve::from_steps(
    Point start, const std::vector<std::pair<char, Coord>>& steps) {
  OrthoCurve c;
  Point cur = start;
  for (auto [dir, len] : steps) {
    if (len < 1) throw std::invalid_argument("curve step length must be >= 1");
    Point nxt = cur;
    switch (dir) {
      case 'u': nxt.y += len; break;
      case 'd': nxt.y -= len; break;
      case 'l': nxt.x -= len; break;
      case 'r': nxt.x += len; break;
      default: throw std::invalid_argument("unknown curve direction");
    }
    if (dir == 'u' || dir == 'd')
      c.segments.push_back(Segment::vertical(cur.x, cur.y, nxt.y));
    else
      c.segments.push_back(Segment::horizontal(cur.y, cur.x, nxt.x));
    cur = nxt;
  }
  if (c.segments.empty()) throw std::invalid_argument("curve needs a segment");
  return c;
}

const Object* Representation::find(Id id) const {
  for (const auto& o : objects)
    if (o.id == id) return &o;
  return nullptr;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v.code << ": " << v.message << "\n";
  return os.str();
}

std::vector<Segment> object_segments(const Object& o) {
  if (const auto* c = std::get_if<OrthoCurve>(&o.geom)) return c->segments;
  const auto& sv = std::get<SingleVerticalObject>(o.geom);
  std::vector<Segment> out;
  out.push_back(sv.vertical);
  out.insert(out.end(), sv.horizontals.begin(), sv.horizontals.end());
  return out;
}

std::vector<Point> object_pair_intersections(const Object& a, const Object& b) {
  std::set<Point> pts;
  for (const auto& sa : object_segments(a)) {
    for (const auto& sb : object_segments(b)) {
      SegHit h = segments_intersect(sa, sb);
      if (h.kind == SegHit::At) {
        pts.insert(h.p);
      } else if (h.kind == SegHit::Overlap) {
        pts.insert(h.overlap.a());
        pts.insert(h.overlap.b());
      }
    }
  }
  return std::vector<Point>(pts.begin(), pts.end());
}

bool objects_intersect(const Object& a, const Object& b) {
  for (const auto& sa : object_segments(a))
    for (const auto& sb : object_segments(b))
      if (!segments_intersect(sa, sb).empty()) return true;
  return false;
}

SingleVerticalObject to_single_vertical(const Object& o) {
  if (const auto* sv = std::get_if<SingleVerticalObject>(&o.geom)) return *sv;
  const auto& c = std::get<OrthoCurve>(o.geom);
  SingleVerticalObject out;
  int verticals = 0;
  for (const auto& s : c.segments) {
    if (s.orient == Orient::Vertical) {
      ++verticals;
      out.vertical = s;
    } else {
      out.horizontals.push_back(s);
    }
  }
  if (verticals > 1)
    throw std::invalid_argument("curve has more than one vertical segment");
  if (verticals == 0) {
    // A horizontal-only curve gets a zero-length vertical at its left endpoint.
    Coord min_x = c.segments.front().lo;
    Coord y = c.segments.front().at;
    for (const auto& s : c.segments) {
      if (s.lo < min_x) {
        min_x = s.lo;
        y = s.at;
      }
    }
    out.vertical = Segment::vertical(min_x, y, y);
  }
  return out;
}

B2ShapeInfo classify_b2_shape(const OrthoCurve& c) {
  if (c.bends() > 2)
    throw std::invalid_argument("classify_b2_shape: curve has more than 2 bends");
  B2ShapeInfo info;
  info.vertical_segments = c.vertical_count();
  switch (c.segments.size()) {
    case 1:
      info.shape = c.segments[0].orient == Orient::Horizontal ? B2Shape::SegmentH
                                                              : B2Shape::SegmentV;
      break;
    case 2:
      info.shape = B2Shape::LFamily;
      break;
    default:
      info.shape = info.vertical_segments == 2 ? B2Shape::UFamily : B2Shape::CZFamily;
      break;
  }
  return info;
}

const char* b2_shape_name(B2Shape s) {
  switch (s) {
    case B2Shape::SegmentH: return "segment-h";
    case B2Shape::SegmentV: return "segment-v";
    case B2Shape::LFamily: return "L-family";
    case B2Shape::CZFamily: return "C/Z-family";
    case B2Shape::UFamily: return "U-family";
  }
  return "?";
}

namespace {

Segment map_segment(const Segment& s, const auto& f) {
  Point a = f(s.a());
  Point b = f(s.b());
  if (a.x == b.x) return Segment::vertical(a.x, a.y, b.y);
  if (a.y == b.y) return Segment::horizontal(a.y, a.x, b.x);
  throw std::logic_error("transform broke axis alignment");
}

Geometry map_geometry(const Geometry& g, const auto& f) {
  if (const auto* c = std::get_if<OrthoCurve>(&g)) {
    OrthoCurve out = *c;
    for (auto& s : out.segments) s = map_segment(s, f);
    return out;
  }
  const auto& sv = std::get<SingleVerticalObject>(g);
  SingleVerticalObject out;
  out.vertical = map_segment(sv.vertical, f);
  if (out.vertical.orient != Orient::Vertical && out.vertical.lo != out.vertical.hi)
    throw std::logic_error("transform must keep the vertical segment vertical");
  if (out.vertical.orient != Orient::Vertical)
    out.vertical = Segment::vertical(out.vertical.lo == out.vertical.hi
                                         ? out.vertical.lo
                                         : out.vertical.at,
                                     out.vertical.at, out.vertical.at);
  for (const auto& h : sv.horizontals) out.horizontals.push_back(map_segment(h, f));
  return out;
}

}  // namespace

Representation apply_transform(const Representation& rep, const Transform& t) {
  Representation out = rep;
  switch (t.kind) {
    case Transform::TranslateY: {
      auto f = [&](Point p) { return Point{p.x, p.y + t.dy}; };
      for (auto& o : out.objects) o.geom = map_geometry(o.geom, f);
      if (out.ref_line && out.ref_line->axis == Orient::Horizontal)
        out.ref_line->twice += 2 * t.dy;
      break;
    }
    case Transform::MirrorX: {
      auto f = [](Point p) { return Point{-p.x, p.y}; };
      for (auto& o : out.objects) o.geom = map_geometry(o.geom, f);
      if (out.ref_line && out.ref_line->axis == Orient::Vertical)
        out.ref_line->twice = -out.ref_line->twice;
      break;
    }
    case Transform::Rotate90: {
      // Counterclockwise quarter turn: (x, y) -> (-y, x).
      auto f = [](Point p) { return Point{-p.y, p.x}; };
      for (auto& o : out.objects) o.geom = map_geometry(o.geom, f);
      if (out.ref_line) {
        out.ref_line->twice = out.ref_line->axis == Orient::Horizontal
                                  ? -out.ref_line->twice
                                  : out.ref_line->twice;
        out.ref_line->axis = out.ref_line->axis == Orient::Horizontal
                                 ? Orient::Vertical
                                 : Orient::Horizontal;
        if (out.ref_line->axis == Orient::Horizontal) {
          // vertical x=c maps to horizontal y=c.
        }
      }
      break;
    }
    case Transform::ExtendSegmentToLine: {
      bool found = false;
      for (auto& o : out.objects) {
        if (o.id != t.object_id) continue;
        found = true;
        auto extend = [&](Segment& s) {
          // Stretch the span until it reaches the target line coordinate.
          // Integer lines are touched exactly; half-integer lines are crossed.
          Coord edge = t.target.twice >= 0 ? t.target.twice / 2
                                           : -((-t.target.twice + 1) / 2);
          if (2 * edge != t.target.twice && t.target.twice < 2 * s.lo) edge += 1;
          if (edge < s.lo) s.lo = edge;
          if (edge > s.hi) s.hi = edge;
        };
        if (auto* c = std::get_if<OrthoCurve>(&o.geom)) {
          if (t.segment_index >= c->segments.size())
            throw std::out_of_range("segment index out of range");
          extend(c->segments[t.segment_index]);
        } else {
          auto& sv = std::get<SingleVerticalObject>(o.geom);
          if (t.segment_index == 0)
            extend(sv.vertical);
          else if (t.segment_index - 1 < sv.horizontals.size())
            extend(sv.horizontals[t.segment_index - 1]);
          else
            throw std::out_of_range("segment index out of range");
        }
      }
      if (!found) throw std::invalid_argument("unknown object id in transform");
      break;
    }
  }
  return out;
}

bool line_meets_segment(const Line& line, const Segment& s) {
  if (line.axis == Orient::Horizontal) {
    if (s.orient == Orient::Horizontal) return 2 * s.at == line.twice;
    return 2 * s.lo <= line.twice && line.twice <= 2 * s.hi;
  }
  if (s.orient == Orient::Vertical) return 2 * s.at == line.twice;
  return 2 * s.lo <= line.twice && line.twice <= 2 * s.hi;
}

bool object_meets_line(const Object& o, const Line& line) {
  for (const auto& s : object_segments(o))
    if (line_meets_segment(line, s)) return true;
  return false;
}

void check_object_geometry(const Object& o, ValidationReport& rep) {
  std::string tag = "object " + std::to_string(o.id);
  if (o.weight < Rat(0))
    rep.add("weight", tag + " has negative weight");
  if (const auto* c = std::get_if<OrthoCurve>(&o.geom)) {
    if (c->segments.empty()) {
      rep.add("curve", tag + " has no segments");
      return;
    }
    for (const auto& s : c->segments)
      if (!s.valid()) rep.add("segment", tag + " has an inverted span");
    for (std::size_t i = 1; i < c->segments.size(); ++i) {
      const Segment& p = c->segments[i - 1];
      const Segment& q = c->segments[i];
      if (p.orient == q.orient)
        rep.add("curve", tag + " has consecutive segments of equal orientation");
      SegHit h = segments_intersect(p, q);
      bool shares = h.kind == SegHit::At &&
                    (h.p == p.a() || h.p == p.b()) &&
                    (h.p == q.a() || h.p == q.b());
      if (!shares)
        rep.add("curve", tag + " consecutive segments do not share an endpoint");
    }
    for (std::size_t i = 0; i + 2 < c->segments.size(); ++i)
      for (std::size_t j = i + 2; j < c->segments.size(); ++j)
        if (!segments_intersect(c->segments[i], c->segments[j]).empty())
          rep.add("curve", tag + " self-intersects");
  } else {
    const auto& sv = std::get<SingleVerticalObject>(o.geom);
    if (sv.vertical.orient != Orient::Vertical)
      rep.add("vertical", tag + " vertical segment has wrong orientation");
    if (!sv.vertical.valid()) rep.add("segment", tag + " has an inverted span");
    for (const auto& h : sv.horizontals) {
      if (h.orient != Orient::Horizontal)
        rep.add("horizontal", tag + " horizontal segment has wrong orientation");
      if (!h.valid()) rep.add("segment", tag + " has an inverted span");
      if (segments_intersect(h, sv.vertical).empty())
        rep.add("connect", tag + " horizontal does not touch the vertical");
    }
  }
}

namespace {

/// Bend count of an object when read as a curve; single-vertical objects
/// count one segment per stored segment.
int effective_bends(const Object& o) {
  if (const auto* c = std::get_if<OrthoCurve>(&o.geom)) return c->bends();
  const auto& sv = std::get<SingleVerticalObject>(o.geom);
  int segs = 1 + static_cast<int>(sv.horizontals.size());
  if (sv.vertical.lo == sv.vertical.hi && sv.horizontals.size() == 1)
    return 0;  // converted horizontal segment
  return segs - 1;
}

bool is_b2_curve_shape(const SingleVerticalObject& sv, std::string* why) {
  if (sv.horizontals.size() > 2) {
    if (why) *why = "more than two horizontal segments";
    return false;
  }
  bool used_lo = false;
  bool used_hi = false;
  for (const auto& h : sv.horizontals) {
    if (h.lo != sv.vertical.at && h.hi != sv.vertical.at) {
      if (why) *why = "horizontal crosses the vertical instead of ending on it";
      return false;
    }
    if (h.at == sv.vertical.lo && !used_lo) {
      used_lo = true;
    } else if (h.at == sv.vertical.hi && !used_hi) {
      used_hi = true;
    } else {
      if (why) *why = "horizontal not attached at a free vertical endpoint";
      return false;
    }
  }
  return true;
}

}  // namespace

ValidationReport validate_representation(const Representation& rep,
                                         RepClass required) {
  ValidationReport out;
  std::set<Id> seen;
  for (const auto& o : rep.objects) {
    if (!seen.insert(o.id).second)
      out.add("id", "duplicate object id " + std::to_string(o.id));
    check_object_geometry(o, out);
  }
  if (!out.ok()) return out;

  // General position: vertical x's distinct across objects, horizontal y's
  // distinct across objects.
  std::map<Coord, Id> xs;
  std::map<Coord, Id> ys;
  for (const auto& o : rep.objects) {
    std::set<Coord> own_x, own_y;
    for (const auto& s : object_segments(o)) {
      if (s.orient == Orient::Vertical)
        own_x.insert(s.at);
      else
        own_y.insert(s.at);
    }
    for (Coord x : own_x) {
      auto [it, fresh] = xs.emplace(x, o.id);
      if (!fresh)
        out.add("general-position",
                "objects " + std::to_string(it->second) + " and " +
                    std::to_string(o.id) + " share vertical x=" + std::to_string(x));
    }
    for (Coord y : own_y) {
      auto [it, fresh] = ys.emplace(y, o.id);
      if (!fresh)
        out.add("general-position",
                "objects " + std::to_string(it->second) + " and " +
                    std::to_string(o.id) + " share horizontal y=" + std::to_string(y));
    }
  }

  auto require_single_vertical = [&](bool as_b2, bool as_b1) {
    for (const auto& o : rep.objects) {
      std::string tag = "object " + std::to_string(o.id);
      if (const auto* c = std::get_if<OrthoCurve>(&o.geom)) {
        if (c->vertical_count() > 1) {
          out.add("single-vertical", tag + " has more than one vertical segment");
          continue;
        }
      }
      SingleVerticalObject sv;
      try {
        sv = to_single_vertical(o);
      } catch (const std::exception& e) {
        out.add("single-vertical", tag + ": " + e.what());
        continue;
      }
      std::string why;
      if (as_b2 && !is_b2_curve_shape(sv, &why))
        out.add("b2", tag + ": " + why);
      if (as_b1 && sv.horizontals.size() > 1)
        out.add("b1", tag + " has more than one horizontal segment");
      if (as_b1 && !sv.horizontals.empty() && !is_b2_curve_shape(sv, &why))
        out.add("b1", tag + ": " + why);
    }
  };

  switch (required) {
    case RepClass::SingleVertical:
      require_single_vertical(false, false);
      break;
    case RepClass::B1:
      for (const auto& o : rep.objects)
        if (effective_bends(o) > 1)
          out.add("b1", "object " + std::to_string(o.id) + " exceeds 1 bend");
      require_single_vertical(false, true);
      break;
    case RepClass::B2:
    case RepClass::B2OneString:
      for (const auto& o : rep.objects)
        if (effective_bends(o) > 2)
          out.add("b2", "object " + std::to_string(o.id) + " exceeds 2 bends");
      for (const auto& o : rep.objects)
        if (const auto* sv = std::get_if<SingleVerticalObject>(&o.geom)) {
          std::string why;
          if (!is_b2_curve_shape(*sv, &why))
            out.add("b2", "object " + std::to_string(o.id) + ": " + why);
        }
      if (required == RepClass::B2OneString) {
        for (std::size_t i = 0; i < rep.objects.size(); ++i)
          for (std::size_t j = i + 1; j < rep.objects.size(); ++j)
            if (object_pair_intersections(rep.objects[i], rep.objects[j]).size() > 1)
              out.add("1-string",
                      "objects " + std::to_string(rep.objects[i].id) + " and " +
                          std::to_string(rep.objects[j].id) +
                          " intersect more than once");
      }
      break;
    case RepClass::Grounded: {
      require_single_vertical(false, true);
      if (!rep.ref_line || rep.ref_line->axis != Orient::Horizontal) {
        out.add("grounded", "missing horizontal reference line");
        break;
      }
      const Line& l = *rep.ref_line;
      for (const auto& o : rep.objects) {
        SingleVerticalObject sv = to_single_vertical(o);
        if (!line_meets_segment(l, sv.vertical))
          out.add("grounded", "object " + std::to_string(o.id) +
                                  " vertical does not reach the ground line");
        for (const auto& h : sv.horizontals)
          if (2 * h.at <= l.twice)
            out.add("grounded", "object " + std::to_string(o.id) +
                                    " has a horizontal segment not above the line");
      }
      break;
    }
    case RepClass::Centered: {
      require_single_vertical(true, false);
      if (!rep.ref_line || rep.ref_line->axis != Orient::Horizontal) {
        out.add("centered", "missing horizontal reference line");
        break;
      }
      const Line& l = *rep.ref_line;
      for (const auto& o : rep.objects) {
        SingleVerticalObject sv = to_single_vertical(o);
        if (!line_meets_segment(l, sv.vertical))
          out.add("centered", "line does not intersect the vertical segment of object " +
                                  std::to_string(o.id));
      }
      break;
    }
  }
  return out;
}

}  // namespace vpg
