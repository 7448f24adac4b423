#include "vpg/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace vpg {

namespace {

std::string rat_str(const Rat& r) { return r.str(); }

Rat parse_rat(const std::string& tok, int line) {
  auto slash = tok.find('/');
  if (slash == std::string::npos)
    throw ParseError(line, "expected <num>/<den>, got '" + tok + "'");
  try {
    long long num = std::stoll(tok.substr(0, slash));
    long long den = std::stoll(tok.substr(slash + 1));
    return Rat(num, den);
  } catch (const std::exception&) {
    throw ParseError(line, "bad rational '" + tok + "'");
  }
}

std::string twice_str(Coord twice) { return std::to_string(twice) + "/2"; }

Coord parse_twice(const std::string& tok, int line) {
  auto slash = tok.find("/2");
  if (slash == std::string::npos || slash + 2 != tok.size())
    throw ParseError(line, "expected <twice>/2, got '" + tok + "'");
  try {
    return std::stoll(tok.substr(0, slash));
  } catch (const std::exception&) {
    throw ParseError(line, "bad line coordinate '" + tok + "'");
  }
}

long long parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "bad integer '" + tok + "'");
  }
}

struct Lines {
  std::vector<std::vector<std::string>> tokens;
  std::vector<int> numbers;
  std::size_t pos = 0;

  explicit Lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
      ++no;
      std::istringstream ls(line);
      std::vector<std::string> toks;
      std::string t;
      while (ls >> t) toks.push_back(t);
      if (toks.empty()) continue;
      tokens.push_back(std::move(toks));
      numbers.push_back(no);
    }
  }
  bool done() const { return pos >= tokens.size(); }
  const std::vector<std::string>& peek(int* line = nullptr) {
    if (done()) throw ParseError(numbers.empty() ? 0 : numbers.back(),
                                 "unexpected end of file");
    if (line) *line = numbers[pos];
    return tokens[pos];
  }
  std::vector<std::string> next(int* line = nullptr) {
    auto t = peek(line);
    ++pos;
    return t;
  }
};

void serialize_object(std::ostringstream& out, const Object& o) {
  if (const auto* sv = std::get_if<SingleVerticalObject>(&o.geom)) {
    out << "obj " << o.id << " " << rat_str(o.weight) << " v " << sv->vertical.at
        << " " << sv->vertical.lo << " " << sv->vertical.hi;
    for (const auto& h : sv->horizontals)
      out << " h " << h.at << " " << h.lo << " " << h.hi;
    out << "\n";
    return;
  }
  const auto& c = std::get<OrthoCurve>(o.geom);
  // Walk the polyline: the start is the endpoint of the first segment that is
  // not shared with the second one.
  Point cur = c.segments[0].a();
  if (c.segments.size() > 1) {
    const Segment& s0 = c.segments[0];
    const Segment& s1 = c.segments[1];
    SegHit shared = segments_intersect(s0, s1);
    cur = shared.p == s0.a() ? s0.b() : s0.a();
  }
  out << "curve " << o.id << " " << rat_str(o.weight) << " " << cur.x << " "
      << cur.y;
  for (const auto& s : c.segments) {
    Point far = (s.a() == cur) ? s.b() : s.a();
    Coord len = s.hi - s.lo;
    char dir;
    if (s.orient == Orient::Horizontal)
      dir = far.x > cur.x ? 'r' : 'l';
    else
      dir = far.y > cur.y ? 'u' : 'd';
    out << " " << dir << " " << len;
    cur = far;
  }
  out << "\n";
}

Object parse_object_line(const std::vector<std::string>& t, int line) {
  Object o;
  if (t[0] == "obj") {
    if (t.size() < 6) throw ParseError(line, "obj needs id, weight and a vertical");
    o.id = static_cast<Id>(parse_int(t[1], line));
    o.weight = parse_rat(t[2], line);
    if (t[3] != "v") throw ParseError(line, "obj must start with its vertical");
    SingleVerticalObject sv;
    sv.vertical = Segment::vertical(parse_int(t[4], line), parse_int(t[5], line),
                                    parse_int(t[6], line));
    std::size_t i = 7;
    while (i < t.size()) {
      if (t[i] != "h" || i + 3 >= t.size())
        throw ParseError(line, "malformed horizontal segment");
      sv.horizontals.push_back(Segment::horizontal(parse_int(t[i + 1], line),
                                                   parse_int(t[i + 2], line),
                                                   parse_int(t[i + 3], line)));
      i += 4;
    }
    o.geom = sv;
    return o;
  }
  if (t[0] == "curve") {
    if (t.size() < 7 || (t.size() - 5) % 2 != 0)
      throw ParseError(line, "curve needs a start point and direction/length pairs");
    o.id = static_cast<Id>(parse_int(t[1], line));
    o.weight = parse_rat(t[2], line);
    Point start{parse_int(t[3], line), parse_int(t[4], line)};
    std::vector<std::pair<char, Coord>> steps;
    for (std::size_t i = 5; i < t.size(); i += 2) {
      if (t[i].size() != 1 || std::string("udlr").find(t[i][0]) == std::string::npos)
        throw ParseError(line, "bad direction '" + t[i] + "'");
      Coord len = parse_int(t[i + 1], line);
      if (len < 1) throw ParseError(line, "curve step length must be >= 1");
      steps.emplace_back(t[i][0], len);
    }
    try {
      o.geom = OrthoCurve::from_steps(start, steps);
    } catch (const std::exception& e) {
      throw ParseError(line, e.what());
    }
    return o;
  }
  throw ParseError(line, "expected obj or curve, got '" + t[0] + "'");
}

}  // namespace

std::string class_name(const RepFlags& flags) {
  if (flags.b1) return "b1";
  if (flags.b2 && flags.one_string) return "b2-1string";
  if (flags.b2) return "b2";
  return "single-vertical";
}

RepFlags flags_from_class(const std::string& name) {
  RepFlags f;
  if (name == "b1") {
    f.b1 = f.b2 = f.single_vertical = true;
  } else if (name == "b2") {
    f.b2 = true;
  } else if (name == "b2-1string") {
    f.b2 = f.one_string = true;
  } else if (name == "single-vertical") {
    f.single_vertical = true;
  } else {
    throw std::invalid_argument("unknown class '" + name + "'");
  }
  return f;
}

RepClass rep_class_from_name(const std::string& name) {
  if (name == "b1") return RepClass::B1;
  if (name == "b2") return RepClass::B2;
  if (name == "b2-1string") return RepClass::B2OneString;
  if (name == "single-vertical") return RepClass::SingleVertical;
  if (name == "grounded") return RepClass::Grounded;
  if (name == "centered") return RepClass::Centered;
  throw std::invalid_argument("unknown class '" + name + "'");
}

std::string serialize_representation(const Representation& rep) {
  std::ostringstream out;
  out << "vpginstance 1\n";
  out << "class " << class_name(rep.flags);
  if (rep.flags.grounded) out << " grounded";
  if (rep.flags.centered) out << " centered";
  out << "\n";
  if (rep.ref_line)
    out << "refline " << (rep.ref_line->axis == Orient::Horizontal ? "h" : "v")
        << " " << twice_str(rep.ref_line->twice) << "\n";
  out << "count " << rep.objects.size() << "\n";
  for (const auto& o : rep.objects) serialize_object(out, o);
  return out.str();
}

Representation parse_representation(const std::string& text) {
  Lines in(text);
  int line = 0;
  auto header = in.next(&line);
  if (header.size() != 2 || header[0] != "vpginstance" || header[1] != "1")
    throw ParseError(line, "expected 'vpginstance 1'");
  auto cls = in.next(&line);
  if (cls.size() < 2 || cls[0] != "class")
    throw ParseError(line, "expected class line");
  Representation rep;
  try {
    rep.flags = flags_from_class(cls[1]);
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
  for (std::size_t i = 2; i < cls.size(); ++i) {
    if (cls[i] == "grounded")
      rep.flags.grounded = true;
    else if (cls[i] == "centered")
      rep.flags.centered = true;
    else
      throw ParseError(line, "unknown class flag '" + cls[i] + "'");
  }
  auto next = in.next(&line);
  if (next[0] == "refline") {
    if (next.size() != 3 || (next[1] != "h" && next[1] != "v"))
      throw ParseError(line, "refline needs an axis and a coordinate");
    rep.ref_line = Line{next[1] == "h" ? Orient::Horizontal : Orient::Vertical,
                        parse_twice(next[2], line)};
    next = in.next(&line);
  }
  if (next.size() != 2 || next[0] != "count")
    throw ParseError(line, "expected count line");
  long long count = parse_int(next[1], line);
  std::set<Id> seen;
  for (long long k = 0; k < count; ++k) {
    auto t = in.next(&line);
    Object o = parse_object_line(t, line);
    if (!seen.insert(o.id).second)
      throw ParseError(line, "duplicate id " + std::to_string(o.id));
    rep.objects.push_back(std::move(o));
  }
  if (!in.done()) throw ParseError(in.numbers[in.pos], "trailing content");
  return rep;
}

namespace {

std::string ids_str(const std::vector<Id>& ids) {
  std::ostringstream out;
  out << ids.size();
  for (Id id : ids) out << " " << id;
  return out.str();
}

std::vector<Id> parse_ids(const std::vector<std::string>& t, std::size_t from,
                          int line) {
  if (from >= t.size()) throw ParseError(line, "missing id count");
  long long k = parse_int(t[from], line);
  if (static_cast<long long>(t.size() - from - 1) != k)
    throw ParseError(line, "id count does not match the list");
  std::vector<Id> ids;
  for (std::size_t i = from + 1; i < t.size(); ++i)
    ids.push_back(static_cast<Id>(parse_int(t[i], line)));
  return ids;
}

void serialize_rep_block(std::ostringstream& out, const char* tag,
                         const Representation& rep) {
  out << tag << " " << rep.objects.size();
  if (rep.ref_line)
    out << " refline " << (rep.ref_line->axis == Orient::Horizontal ? "h" : "v")
        << " " << twice_str(rep.ref_line->twice);
  out << "\n";
  for (const auto& o : rep.objects) serialize_object(out, o);
}

Representation parse_rep_block(Lines& in, const std::vector<std::string>& head,
                               int line) {
  Representation rep;
  long long count = parse_int(head[1], line);
  if (head.size() > 2) {
    if (head.size() != 5 || head[2] != "refline")
      throw ParseError(line, "malformed geometry header");
    rep.ref_line = Line{head[3] == "h" ? Orient::Horizontal : Orient::Vertical,
                        parse_twice(head[4], line)};
  }
  for (long long k = 0; k < count; ++k) {
    int l2 = 0;
    auto t = in.next(&l2);
    rep.objects.push_back(parse_object_line(t, l2));
  }
  return rep;
}

struct CertWriter {
  std::ostringstream& out;
  void operator()(const OuterstringCert& c) {
    out << "cert outerstring " << c.groups.size() << "\n";
    for (const auto& g : c.groups) {
      out << "group " << twice_str(g.line_twice) << " "
          << (g.side == OuterstringGroup::Side::Left ? "left" : "right") << " "
          << ids_str(g.members) << "\n";
      if (g.rep_override) serialize_rep_block(out, "grouprep", *g.rep_override);
    }
  }
  void operator()(const CorneredCert& c) {
    out << "cert cornered " << twice_str(c.apex_twice_x) << " "
        << twice_str(c.apex_twice_y) << " " << (c.ray2_left ? "left" : "right")
        << "\n";
    out << "perm1 " << ids_str(c.order1) << "\n";
    out << "perm2 " << ids_str(c.order2) << "\n";
  }
  void operator()(const PermPairCert& c) {
    out << "cert permpair\n";
    out << "perm1 " << ids_str(c.order1) << "\n";
    out << "perm2 " << ids_str(c.order2) << "\n";
  }
  void operator()(const Dim3Cert& c) {
    out << "cert dim3\n";
    out << "perm1 " << ids_str(c.order1) << "\n";
    out << "perm2 " << ids_str(c.order2) << "\n";
    out << "perm3 " << ids_str(c.order3) << "\n";
  }
  void operator()(const CenteredCert& c) {
    out << "cert centered " << (c.line.axis == Orient::Horizontal ? "h" : "v")
        << " " << twice_str(c.line.twice) << "\n";
  }
  void operator()(const GroundedCert& c) {
    out << "cert grounded " << (c.line.axis == Orient::Horizontal ? "h" : "v")
        << " " << twice_str(c.line.twice) << "\n";
  }
  void operator()(const SingleVerticalPairCert& c) {
    out << "cert svpair " << (c.rotated ? "rotated" : "straight") << "\n";
  }
};

std::vector<Id> parse_perm_line(Lines& in, const char* tag) {
  int line = 0;
  auto t = in.next(&line);
  if (t[0] != tag) throw ParseError(line, std::string("expected ") + tag);
  return parse_ids(t, 1, line);
}

}  // namespace

std::string serialize_decomposition(const Decomposition& d,
                                    const std::string& source_digest) {
  std::ostringstream out;
  out << "vpgparts 1\n";
  out << "source " << source_digest << "\n";
  out << "strategy " << d.strategy << "\n";
  out << "n " << d.n << "\n";
  out << "bound " << bound_formula_name(d.bound) << "\n";
  out << "parts " << d.parts.size() << "\n";
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const Part& p = d.parts[i];
    out << "part " << i << "\n";
    out << "members " << ids_str(p.members) << "\n";
    std::visit(CertWriter{out}, p.cert);
    if (p.rep) serialize_rep_block(out, "rep", *p.rep);
    out << "endpart\n";
  }
  for (const auto& e : d.edge_partition)
    out << "edgepart " << e.u << " " << e.v << " "
        << (e.above && e.below ? "both" : (e.above ? "above" : "below")) << "\n";
  return out.str();
}

std::pair<Decomposition, std::string> parse_decomposition(const std::string& text) {
  Lines in(text);
  int line = 0;
  auto header = in.next(&line);
  if (header.size() != 2 || header[0] != "vpgparts" || header[1] != "1")
    throw ParseError(line, "expected 'vpgparts 1'");
  auto source = in.next(&line);
  if (source.size() != 2 || source[0] != "source")
    throw ParseError(line, "expected source line");
  Decomposition d;
  auto strat = in.next(&line);
  if (strat.size() != 2 || strat[0] != "strategy")
    throw ParseError(line, "expected strategy line");
  d.strategy = strat[1];
  auto nline = in.next(&line);
  if (nline.size() != 2 || nline[0] != "n") throw ParseError(line, "expected n line");
  d.n = static_cast<std::size_t>(parse_int(nline[1], line));
  auto bline = in.next(&line);
  if (bline.size() != 2 || bline[0] != "bound")
    throw ParseError(line, "expected bound line");
  try {
    d.bound = bound_formula_from_name(bline[1]);
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
  auto pline = in.next(&line);
  if (pline.size() != 2 || pline[0] != "parts")
    throw ParseError(line, "expected parts line");
  long long parts = parse_int(pline[1], line);

  for (long long i = 0; i < parts; ++i) {
    auto ph = in.next(&line);
    if (ph.size() != 2 || ph[0] != "part" || parse_int(ph[1], line) != i)
      throw ParseError(line, "expected 'part " + std::to_string(i) + "'");
    Part part;
    auto mline = in.next(&line);
    if (mline[0] != "members") throw ParseError(line, "expected members line");
    part.members = parse_ids(mline, 1, line);

    auto cline = in.next(&line);
    if (cline.size() < 2 || cline[0] != "cert")
      throw ParseError(line, "expected cert line");
    const std::string kind = cline[1];
    if (kind == "outerstring") {
      if (cline.size() != 3) throw ParseError(line, "outerstring needs a group count");
      long long groups = parse_int(cline[2], line);
      OuterstringCert cert;
      for (long long gi = 0; gi < groups; ++gi) {
        auto g = in.next(&line);
        if (g.size() < 4 || g[0] != "group")
          throw ParseError(line, "expected group line");
        OuterstringGroup grp;
        grp.line_twice = parse_twice(g[1], line);
        if (g[2] == "left")
          grp.side = OuterstringGroup::Side::Left;
        else if (g[2] == "right")
          grp.side = OuterstringGroup::Side::Right;
        else
          throw ParseError(line, "bad side '" + g[2] + "'");
        grp.members = parse_ids(g, 3, line);
        if (!in.done() && in.peek()[0] == "grouprep") {
          auto head = in.next(&line);
          grp.rep_override = parse_rep_block(in, head, line);
        }
        cert.groups.push_back(std::move(grp));
      }
      part.cert = std::move(cert);
    } else if (kind == "cornered") {
      if (cline.size() != 5) throw ParseError(line, "malformed cornered cert");
      CorneredCert cert;
      cert.apex_twice_x = parse_twice(cline[2], line);
      cert.apex_twice_y = parse_twice(cline[3], line);
      cert.ray2_left = cline[4] == "left";
      cert.order1 = parse_perm_line(in, "perm1");
      cert.order2 = parse_perm_line(in, "perm2");
      part.cert = std::move(cert);
    } else if (kind == "permpair") {
      PermPairCert cert;
      cert.order1 = parse_perm_line(in, "perm1");
      cert.order2 = parse_perm_line(in, "perm2");
      part.cert = std::move(cert);
    } else if (kind == "dim3") {
      Dim3Cert cert;
      cert.order1 = parse_perm_line(in, "perm1");
      cert.order2 = parse_perm_line(in, "perm2");
      cert.order3 = parse_perm_line(in, "perm3");
      part.cert = std::move(cert);
    } else if (kind == "centered" || kind == "grounded") {
      if (cline.size() != 4) throw ParseError(line, "malformed line certificate");
      Line l{cline[2] == "h" ? Orient::Horizontal : Orient::Vertical,
             parse_twice(cline[3], line)};
      if (kind == "centered")
        part.cert = CenteredCert{l};
      else
        part.cert = GroundedCert{l};
    } else if (kind == "svpair") {
      if (cline.size() != 3) throw ParseError(line, "malformed svpair cert");
      part.cert = SingleVerticalPairCert{cline[2] == "rotated"};
    } else {
      throw ParseError(line, "unknown certificate kind '" + kind + "'");
    }

    auto tail = in.next(&line);
    if (tail[0] == "rep") {
      part.rep = parse_rep_block(in, tail, line);
      tail = in.next(&line);
    }
    if (tail.size() != 1 || tail[0] != "endpart")
      throw ParseError(line, "expected endpart");
    d.parts.push_back(std::move(part));
  }
  while (!in.done()) {
    auto t = in.next(&line);
    if (t.size() != 4 || t[0] != "edgepart")
      throw ParseError(line, "expected edgepart line");
    EdgeSideRecord rec;
    rec.u = static_cast<Id>(parse_int(t[1], line));
    rec.v = static_cast<Id>(parse_int(t[2], line));
    if (t[3] == "above") {
      rec.above = true;
    } else if (t[3] == "below") {
      rec.below = true;
    } else if (t[3] == "both") {
      rec.above = rec.below = true;
    } else {
      throw ParseError(line, "bad edge side '" + t[3] + "'");
    }
    d.edge_partition.push_back(rec);
  }
  return {std::move(d), source[1]};
}

std::string serialize_solution(const Solution& s) {
  std::ostringstream out;
  out << "vpgsolution 1\n";
  out << "problem " << problem_name(s.problem) << "\n";
  out << "value " << s.value.str() << "\n";
  switch (s.problem) {
    case Problem::WIS:
    case Problem::WClique:
      out << "vertices " << ids_str(s.vertex_set) << "\n";
      break;
    case Problem::Coloring:
      out << "colors " << s.coloring.size() << "\n";
      for (auto [id, c] : s.coloring) out << "assign " << id << " " << c << "\n";
      break;
    case Problem::CliqueCover:
      out << "cliques " << s.cliques.size() << "\n";
      for (const auto& q : s.cliques) out << "clique " << ids_str(q) << "\n";
      break;
  }
  return out.str();
}

Solution parse_solution(const std::string& text) {
  Lines in(text);
  int line = 0;
  auto header = in.next(&line);
  if (header.size() != 2 || header[0] != "vpgsolution" || header[1] != "1")
    throw ParseError(line, "expected 'vpgsolution 1'");
  auto pline = in.next(&line);
  if (pline.size() != 2 || pline[0] != "problem")
    throw ParseError(line, "expected problem line");
  Solution s;
  try {
    s.problem = problem_from_name(pline[1]);
  } catch (const std::exception& e) {
    throw ParseError(line, e.what());
  }
  auto vline = in.next(&line);
  if (vline.size() != 2 || vline[0] != "value")
    throw ParseError(line, "expected value line");
  s.value = parse_rat(vline[1], line);
  switch (s.problem) {
    case Problem::WIS:
    case Problem::WClique: {
      auto t = in.next(&line);
      if (t[0] != "vertices") throw ParseError(line, "expected vertices line");
      s.vertex_set = parse_ids(t, 1, line);
      break;
    }
    case Problem::Coloring: {
      auto t = in.next(&line);
      if (t.size() != 2 || t[0] != "colors")
        throw ParseError(line, "expected colors line");
      long long k = parse_int(t[1], line);
      for (long long i = 0; i < k; ++i) {
        auto a = in.next(&line);
        if (a.size() != 3 || a[0] != "assign")
          throw ParseError(line, "expected assign line");
        s.coloring.emplace_back(static_cast<Id>(parse_int(a[1], line)),
                                static_cast<int>(parse_int(a[2], line)));
      }
      break;
    }
    case Problem::CliqueCover: {
      auto t = in.next(&line);
      if (t.size() != 2 || t[0] != "cliques")
        throw ParseError(line, "expected cliques line");
      long long k = parse_int(t[1], line);
      for (long long i = 0; i < k; ++i) {
        auto q = in.next(&line);
        if (q[0] != "clique") throw ParseError(line, "expected clique line");
        s.cliques.push_back(parse_ids(q, 1, line));
      }
      break;
    }
  }
  if (!in.done()) throw ParseError(in.numbers[in.pos], "trailing content");
  return s;
}

std::string digest(const std::string& bytes) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xF];
    h >>= 4;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
    if (!out.good()) throw std::runtime_error("write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("rename failed for " + path + ": " + ec.message());
}

}  // namespace vpg
