#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vpg/rational.hpp"

namespace vpg {

using Coord = long long;
using Id = unsigned long long;

struct Point {
  Coord x = 0;
  Coord y = 0;
  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const Point& a, const Point& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

enum class Orient { Horizontal, Vertical };

/// Axis-parallel segment on the integer grid. For a horizontal segment `at`
/// is the y coordinate and [lo,hi] the x span; for a vertical segment `at`
/// is x and [lo,hi] the y span. lo == hi (a point) is allowed.
struct Segment {
  Orient orient = Orient::Horizontal;
  Coord at = 0;
  Coord lo = 0;
  Coord hi = 0;

  static Segment horizontal(Coord y, Coord x1, Coord x2) {
    return Segment{Orient::Horizontal, y, x1 < x2 ? x1 : x2, x1 < x2 ? x2 : x1};
  }
  static Segment vertical(Coord x, Coord y1, Coord y2) {
    return Segment{Orient::Vertical, x, y1 < y2 ? y1 : y2, y1 < y2 ? y2 : y1};
  }
  bool valid() const { return lo <= hi; }
  Point a() const {
    return orient == Orient::Horizontal ? Point{lo, at} : Point{at, lo};
  }
  Point b() const {
    return orient == Orient::Horizontal ? Point{hi, at} : Point{at, hi};
  }
  friend bool operator==(const Segment& s, const Segment& t) {
    return s.orient == t.orient && s.at == t.at && s.lo == t.lo && s.hi == t.hi;
  }
};

/// Segment intersection outcome. Perpendicular pairs meet in at most one
/// point; collinear pairs may share a whole interval.
struct SegHit {
  enum Kind { None, At, Overlap } kind = None;
  Point p{};
  Segment overlap{};
  bool empty() const { return kind == None; }
};

SegHit segments_intersect(const Segment& a, const Segment& b);

/// Orthogonal polyline: consecutive segments alternate orientation and share
/// exactly one endpoint. Bend count is segments.size() - 1.
struct OrthoCurve {
  std::vector<Segment> segments;

  int bends() const { return static_cast<int>(segments.size()) - 1; }
  int vertical_count() const;
  /// Builds a curve from a start point and (direction, length) steps.
  /// dir is one of 'u','d','l','r'; every length must be >= 1.
  static OrthoCurve from_steps(Point start,
                               const std::vector<std::pair<char, Coord>>& steps);
};

/// One vertical segment (possibly zero length) plus horizontal segments, each
/// touching the vertical. The object's x coordinate is vertical.at.
struct SingleVerticalObject {
  Segment vertical;
  std::vector<Segment> horizontals;

  Coord x() const { return vertical.at; }
};

using Geometry = std::variant<OrthoCurve, SingleVerticalObject>;

struct Object {
  Id id = 0;
  Rat weight{0};
  Geometry geom;
};

/// Axis-parallel line with its coordinate stored doubled, so half-integer
/// split lines are exact. Horizontal lines are y = twice/2, vertical x = twice/2.
struct Line {
  Orient axis = Orient::Horizontal;
  Coord twice = 0;
  friend bool operator==(const Line& a, const Line& b) {
    return a.axis == b.axis && a.twice == b.twice;
  }
};

enum class RepClass {
  SingleVertical,
  B1,
  B2,
  B2OneString,
  Grounded,
  Centered,
};

struct RepFlags {
  bool b1 = false;
  bool b2 = false;
  bool one_string = false;
  bool single_vertical = false;
  bool grounded = false;
  bool centered = false;
};

struct Representation {
  std::vector<Object> objects;
  RepFlags flags;
  std::optional<Line> ref_line;

  std::size_t size() const { return objects.size(); }
  const Object* find(Id id) const;
};

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string code, std::string message) {
    violations.push_back({std::move(code), std::move(message)});
  }
  std::string summary() const;
};

std::vector<Segment> object_segments(const Object& o);

/// All intersection points between two objects, deduplicated and sorted.
/// Collinear overlaps contribute both overlap endpoints.
std::vector<Point> object_pair_intersections(const Object& a, const Object& b);

bool objects_intersect(const Object& a, const Object& b);

/// Normalizes any valid object geometry to single-vertical form. A curve
/// with no vertical segment gets a zero-length vertical at its left endpoint.
/// Throws std::invalid_argument if the curve has more than one vertical.
SingleVerticalObject to_single_vertical(const Object& o);

enum class B2Shape { SegmentH, SegmentV, LFamily, CZFamily, UFamily };

struct B2ShapeInfo {
  int vertical_segments = 0;
  B2Shape shape = B2Shape::SegmentH;
};

/// Classifies a <=2-bend curve by vertical-segment count. Throws on >2 bends.
B2ShapeInfo classify_b2_shape(const OrthoCurve& c);

const char* b2_shape_name(B2Shape s);

struct Transform {
  enum Kind { TranslateY, ExtendSegmentToLine, MirrorX, Rotate90 } kind;
  Coord dy = 0;            // TranslateY
  Id object_id = 0;        // ExtendSegmentToLine
  std::size_t segment_index = 0;
  Line target{};           // ExtendSegmentToLine
};

/// Applies a geometric transform to every object (and the reference line).
/// Ids and weights are untouched.
Representation apply_transform(const Representation& rep, const Transform& t);

ValidationReport validate_representation(const Representation& rep,
                                         RepClass required);

/// True iff the line meets the closed segment. Exact in doubled coordinates.
bool line_meets_segment(const Line& line, const Segment& s);
bool object_meets_line(const Object& o, const Line& line);

/// Structural check for one object; used by the validator and by parsers.
void check_object_geometry(const Object& o, ValidationReport& rep);

}  // namespace vpg
