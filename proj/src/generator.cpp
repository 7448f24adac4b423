#include "vpg/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace vpg {

InstanceSpec::Kind instance_kind_from_name(const std::string& s) {
  if (s == "b1") return InstanceSpec::Kind::B1;
  if (s == "b2") return InstanceSpec::Kind::B2;
  if (s == "b2-1string") return InstanceSpec::Kind::B2OneString;
  if (s == "single-vertical") return InstanceSpec::Kind::SingleVertical;
  throw std::invalid_argument("unknown instance kind '" + s + "'");
}

const char* instance_kind_name(InstanceSpec::Kind k) {
  switch (k) {
    case InstanceSpec::Kind::B1: return "b1";
    case InstanceSpec::Kind::B2: return "b2";
    case InstanceSpec::Kind::B2OneString: return "b2-1string";
    case InstanceSpec::Kind::SingleVertical: return "single-vertical";
  }
  return "?";
}

namespace {

struct CoordPool {
  std::vector<Coord> values;
  std::size_t next = 0;
  Coord take() {
    if (next >= values.size())
      throw std::invalid_argument("grid too small for the requested instance");
    return values[next++];
  }
};

CoordPool make_pool(Coord grid, std::mt19937_64& rng) {
  CoordPool pool;
  pool.values.resize(static_cast<std::size_t>(grid));
  for (Coord i = 0; i < grid; ++i) pool.values[static_cast<std::size_t>(i)] = i;
  std::shuffle(pool.values.begin(), pool.values.end(), rng);
  return pool;
}

}  // namespace

Representation generate_instance(const InstanceSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("instance needs n >= 1");
  if (spec.weight_min < 0 || spec.weight_min > spec.weight_max)
    throw std::invalid_argument("bad weight range");
  if (spec.max_horizontals < 0)
    throw std::invalid_argument("max_horizontals must be nonnegative");

  const std::size_t n = spec.n;
  std::size_t x_need = 0, y_need = 0;
  switch (spec.kind) {
    case InstanceSpec::Kind::B1:
      x_need = n;
      y_need = 2 * n;
      break;
    case InstanceSpec::Kind::B2:
    case InstanceSpec::Kind::B2OneString:
      x_need = 2 * n;
      y_need = 3 * n;
      break;
    case InstanceSpec::Kind::SingleVertical:
      x_need = n;
      y_need = (2 + static_cast<std::size_t>(spec.max_horizontals)) * n;
      break;
  }
  Coord grid = spec.grid;
  if (grid == 0) {
    // Rejection sampling for 1-string instances burns extra coordinates.
    std::size_t slack = spec.kind == InstanceSpec::Kind::B2OneString ? 6 : 2;
    grid = static_cast<Coord>(slack * std::max(x_need, y_need) + 8);
  }
  if (grid < static_cast<Coord>(2 * n))
    throw std::invalid_argument("grid must be at least 2n");
  if (static_cast<std::size_t>(grid) < x_need ||
      static_cast<std::size_t>(grid) < y_need)
    throw std::invalid_argument("grid too small for the requested instance");

  std::mt19937_64 rng(spec.seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
  CoordPool xs = make_pool(grid, rng);
  CoordPool ys = make_pool(grid, rng);
  auto rand_int = [&](long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
  };
  auto rand_len = [&] { return static_cast<Coord>(rand_int(1, std::max<Coord>(2, grid / 2))); };

  Representation rep;
  switch (spec.kind) {
    case InstanceSpec::Kind::B1:
      rep.flags.b1 = true;
      rep.flags.b2 = true;
      rep.flags.single_vertical = true;
      break;
    case InstanceSpec::Kind::B2: rep.flags.b2 = true; break;
    case InstanceSpec::Kind::B2OneString:
      rep.flags.b2 = true;
      rep.flags.one_string = true;
      break;
    case InstanceSpec::Kind::SingleVertical: rep.flags.single_vertical = true; break;
  }

  auto make_b1_or_b2 = [&](bool allow_two_bends) -> Geometry {
    // Shape families: 0-bend segments, 1-bend Ls, and for B2 the 2-bend
    // h-v-h and v-h-v chains.
    long long family = rand_int(0, allow_two_bends ? 4 : 2);
    switch (family) {
      case 0: {  // horizontal segment
        Coord x = xs.take(), y = ys.take();
        return OrthoCurve::from_steps({x, y}, {{'r', rand_len()}});
      }
      case 1: {  // vertical segment
        Coord x = xs.take();
        Coord y1 = ys.take(), y2 = ys.take();
        if (y1 > y2) std::swap(y1, y2);
        return OrthoCurve::from_steps({x, y1}, {{'u', y2 - y1}});
      }
      case 2: {  // L family, four orientations
        Coord x = xs.take();
        Coord y1 = ys.take(), y2 = ys.take();
        if (y1 > y2) std::swap(y1, y2);
        bool at_top = rand_int(0, 1) == 1;
        char dir = rand_int(0, 1) == 1 ? 'r' : 'l';
        Coord len = rand_len();
        if (at_top)
          return OrthoCurve::from_steps({x, y1}, {{'u', y2 - y1}, {dir, len}});
        return OrthoCurve::from_steps({x, y2}, {{'d', y2 - y1}, {dir, len}});
      }
      case 3: {  // h-v-h family (C, Z and mirror images)
        Coord x = xs.take();
        Coord y1 = ys.take(), y2 = ys.take();
        if (y1 > y2) std::swap(y1, y2);
        char d1 = rand_int(0, 1) == 1 ? 'r' : 'l';
        char d2 = rand_int(0, 1) == 1 ? 'r' : 'l';
        Coord l1 = rand_len(), l2 = rand_len();
        Coord start_x = d1 == 'r' ? x - l1 : x + l1;
        return OrthoCurve::from_steps({start_x, y1},
                                      {{d1, l1}, {'u', y2 - y1}, {d2, l2}});
      }
      default: {  // v-h-v family (U and company)
        Coord x1 = xs.take(), x2 = xs.take();
        if (x1 > x2) std::swap(x1, x2);
        Coord ya = ys.take(), yb = ys.take(), yc = ys.take();
        Coord lo = std::min({ya, yb, yc});
        Coord mid = ya + yb + yc - std::min({ya, yb, yc}) - std::max({ya, yb, yc});
        Coord hi = std::max({ya, yb, yc});
        bool opens_up = rand_int(0, 1) == 1;
        if (opens_up)  // both arms above the base
          return OrthoCurve::from_steps({x1, mid},
                                        {{'d', mid - lo}, {'r', x2 - x1}, {'u', hi - lo}});
        return OrthoCurve::from_steps({x1, mid},
                                      {{'u', hi - mid}, {'r', x2 - x1}, {'d', hi - lo}});
      }
    }
  };

  auto make_single_vertical = [&]() -> Geometry {
    int k = static_cast<int>(rand_int(0, spec.max_horizontals));
    std::vector<Coord> marks;
    for (int i = 0; i < k + 2; ++i) marks.push_back(ys.take());
    std::sort(marks.begin(), marks.end());
    SingleVerticalObject sv;
    Coord x = xs.take();
    sv.vertical = Segment::vertical(x, marks.front(), marks.back());
    for (int i = 1; i <= k; ++i) {
      Coord left = static_cast<Coord>(rand_int(0, std::max<Coord>(1, grid / 4)));
      Coord right = static_cast<Coord>(rand_int(0, std::max<Coord>(1, grid / 4)));
      sv.horizontals.push_back(Segment::horizontal(marks[i], x - left, x + right));
    }
    return sv;
  };

  const bool one_string = spec.kind == InstanceSpec::Kind::B2OneString;
  for (std::size_t i = 0; i < n; ++i) {
    Object o;
    o.id = i;
    o.weight = Rat(rand_int(spec.weight_min, spec.weight_max));
    for (int attempt = 0;; ++attempt) {
      if (attempt > 200)
        throw std::invalid_argument(
            "could not place a 1-string object; enlarge the grid");
      switch (spec.kind) {
        case InstanceSpec::Kind::B1: o.geom = make_b1_or_b2(false); break;
        case InstanceSpec::Kind::B2:
        case InstanceSpec::Kind::B2OneString: o.geom = make_b1_or_b2(true); break;
        case InstanceSpec::Kind::SingleVertical: o.geom = make_single_vertical(); break;
      }
      if (!one_string) break;
      bool ok = true;
      for (const auto& prev : rep.objects)
        if (object_pair_intersections(prev, o).size() > 1) {
          ok = false;
          break;
        }
      if (ok) break;
    }
    rep.objects.push_back(std::move(o));
  }
  return rep;
}

}  // namespace vpg
