#include "vpg/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace vpg {

namespace {

constexpr Coord kScale = 10;

struct Bounds {
  Coord min_x = 0, max_x = 1, min_y = 0, max_y = 1;
  bool any = false;
  void eat(Coord x, Coord y) {
    if (!any) {
      min_x = max_x = x;
      min_y = max_y = y;
      any = true;
      return;
    }
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
};

/// Fixed palette walk: spaced hues, full saturation, deterministic.
std::string part_color(std::size_t index) {
  unsigned hue = static_cast<unsigned>((index * 137) % 360);
  unsigned h = hue / 60;
  unsigned f = hue % 60;
  unsigned q = 255 - 255 * f / 60;
  unsigned t = 255 * f / 60;
  unsigned r = 0, g = 0, b = 0;
  switch (h) {
    case 0: r = 255; g = t; break;
    case 1: r = q; g = 255; break;
    case 2: g = 255; b = t; break;
    case 3: g = q; b = 255; break;
    case 4: r = t; b = 255; break;
    default: r = 255; b = q; break;
  }
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

std::string render_svg(const Representation& rep,
                       const std::optional<Decomposition>& dec) {
  Bounds box;
  for (const auto& o : rep.objects)
    for (const auto& s : object_segments(o)) {
      box.eat(s.a().x, s.a().y);
      box.eat(s.b().x, s.b().y);
    }
  std::map<Id, std::size_t> part_of;
  if (dec) {
    for (std::size_t i = 0; i < dec->parts.size(); ++i) {
      for (Id id : dec->parts[i].members) part_of[id] = i;
      if (dec->parts[i].rep)
        for (const auto& o : dec->parts[i].rep->objects)
          for (const auto& s : object_segments(o)) {
            box.eat(s.a().x, s.a().y);
            box.eat(s.b().x, s.b().y);
          }
    }
  }
  if (rep.ref_line) {
    if (rep.ref_line->axis == Orient::Horizontal)
      box.eat(box.min_x, rep.ref_line->twice / 2);
    else
      box.eat(rep.ref_line->twice / 2, box.min_y);
  }

  const Coord margin = 2;
  const Coord x0 = box.min_x - margin;
  const Coord y1 = box.max_y + margin;
  auto sx = [&](Coord x) { return (x - x0) * kScale; };
  auto sy = [&](Coord y) { return (y1 - y) * kScale; };  // flip y
  auto sx2 = [&](Coord twice) { return (twice - 2 * x0) * kScale / 2; };
  auto sy2 = [&](Coord twice) { return (2 * y1 - twice) * kScale / 2; };

  std::ostringstream out;
  Coord width = sx(box.max_x + margin);
  Coord height = sy(box.min_y - margin);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  // Axes as faint guides.
  out << "<line x1=\"0\" y1=\"" << sy(0) << "\" x2=\"" << width << "\" y2=\""
      << sy(0) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  out << "<line x1=\"" << sx(0) << "\" y1=\"0\" x2=\"" << sx(0) << "\" y2=\""
      << height << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";

  auto draw_object = [&](const Object& o, const std::string& color) {
    out << "<g class=\"object\" data-id=\"" << o.id << "\" stroke=\"" << color
        << "\" stroke-width=\"3\" stroke-linecap=\"round\">\n";
    for (const auto& s : object_segments(o)) {
      Point a = s.a(), b = s.b();
      out << "  <line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\""
          << sx(b.x) << "\" y2=\"" << sy(b.y) << "\"/>\n";
    }
    out << "</g>\n";
  };

  auto draw_line = [&](const Line& l, const std::string& color) {
    if (l.axis == Orient::Horizontal)
      out << "<line x1=\"0\" y1=\"" << sy2(l.twice) << "\" x2=\"" << width
          << "\" y2=\"" << sy2(l.twice) << "\" stroke=\"" << color
          << "\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
    else
      out << "<line x1=\"" << sx2(l.twice) << "\" y1=\"0\" x2=\"" << sx2(l.twice)
          << "\" y2=\"" << height << "\" stroke=\"" << color
          << "\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
  };

  if (rep.ref_line) draw_line(*rep.ref_line, "#888888");

  if (!dec) {
    for (const auto& o : rep.objects) draw_object(o, "#1f3a93");
  } else {
    for (const auto& o : rep.objects) {
      auto it = part_of.find(o.id);
      std::string color = it == part_of.end() ? "#999999" : part_color(it->second);
      draw_object(o, color);
    }
    for (std::size_t i = 0; i < dec->parts.size(); ++i) {
      const Part& p = dec->parts[i];
      if (const auto* cen = std::get_if<CenteredCert>(&p.cert))
        draw_line(cen->line, part_color(i));
      if (const auto* grd = std::get_if<GroundedCert>(&p.cert))
        draw_line(grd->line, part_color(i));
      if (const auto* cor = std::get_if<CorneredCert>(&p.cert)) {
        draw_line(Line{Orient::Vertical, cor->apex_twice_x}, part_color(i));
        draw_line(Line{Orient::Horizontal, cor->apex_twice_y}, part_color(i));
      }
      if (const auto* os = std::get_if<OuterstringCert>(&p.cert))
        for (const auto& g : os->groups)
          draw_line(Line{Orient::Vertical, g.line_twice}, part_color(i));
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace vpg
