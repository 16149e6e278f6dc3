#include "corona/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace corona {

std::array<Vertex, 3> vertices(TriangleId t) {
  if (t.points_up) return {Vertex{t.x, t.y}, Vertex{t.x + 1, t.y}, Vertex{t.x, t.y + 1}};
  return {Vertex{t.x + 1, t.y}, Vertex{t.x, t.y + 1}, Vertex{t.x + 1, t.y + 1}};
}

std::array<TriangleId, 3> adjacency(TriangleId t) {
  if (t.points_up)
    return {TriangleId::down(t.x, t.y), TriangleId::down(t.x - 1, t.y), TriangleId::down(t.x, t.y - 1)};
  return {TriangleId::up(t.x, t.y), TriangleId::up(t.x + 1, t.y), TriangleId::up(t.x, t.y + 1)};
}

std::array<TriangleId, 6> triangles_around(Vertex v) {
  return {TriangleId::up(v.x, v.y),       TriangleId::up(v.x - 1, v.y),
          TriangleId::up(v.x, v.y - 1),   TriangleId::down(v.x - 1, v.y - 1),
          TriangleId::down(v.x - 1, v.y), TriangleId::down(v.x, v.y - 1)};
}

int shared_vertex_count(TriangleId a, TriangleId b) {
  const auto va = vertices(a);
  const auto vb = vertices(b);
  int shared = 0;
  for (const auto& p : va)
    if (std::find(vb.begin(), vb.end(), p) != vb.end()) ++shared;
  return shared;
}

bool edge_adjacent(TriangleId a, TriangleId b) { return a != b && shared_vertex_count(a, b) == 2; }

std::optional<TriangleId> triangle_from_vertices(std::array<Vertex, 3> corners) {
  // x+y sums: U(x,y) -> s, s+1, s+1; D(x,y) -> s+1, s+1, s+2 with s = x+y.
  const int total = corners[0].x + corners[0].y + corners[1].x + corners[1].y + corners[2].x + corners[2].y;
  const int rem = ((total % 3) + 3) % 3;
  std::optional<TriangleId> guess;
  if (rem == 2) {
    auto low = *std::min_element(corners.begin(), corners.end(),
                                 [](Vertex a, Vertex b) { return a.x + a.y < b.x + b.y; });
    guess = TriangleId::up(low.x, low.y);
  } else if (rem == 1) {
    auto high = *std::max_element(corners.begin(), corners.end(),
                                  [](Vertex a, Vertex b) { return a.x + a.y < b.x + b.y; });
    guess = TriangleId::down(high.x - 1, high.y - 1);
  } else {
    return std::nullopt;
  }
  auto expect = vertices(*guess);
  std::sort(expect.begin(), expect.end());
  std::sort(corners.begin(), corners.end());
  if (expect != corners) return std::nullopt;
  return guess;
}

TriangleId rotate60(TriangleId t) {
  auto vs = vertices(t);
  for (auto& v : vs) v = rotate60(v);
  return *triangle_from_vertices(vs);
}

TriangleId translate(TriangleId t, Vertex offset) { return {t.x + offset.x, t.y + offset.y, t.points_up}; }

std::string to_string(LozengeOrientation o) {
  switch (o) {
    case LozengeOrientation::left_tilted: return "left-tilted";
    case LozengeOrientation::right_tilted: return "right-tilted";
    case LozengeOrientation::vertical: return "vertical";
  }
  return "?";
}

Lozenge::Lozenge(TriangleId a, TriangleId b) : first_(std::min(a, b)), second_(std::max(a, b)) {
  if (!edge_adjacent(a, b)) throw std::invalid_argument("lozenge needs two edge-adjacent triangles");
}

LozengeOrientation Lozenge::orientation() const {
  const TriangleId up = first_.points_up ? first_ : second_;
  const TriangleId down = first_.points_up ? second_ : first_;
  // Shared edge of U(x,y) with D(x,y) runs along (-1,1), with D(x-1,y) along
  // (0,1), with D(x,y-1) along (1,0).
  if (down.x == up.x && down.y == up.y) return LozengeOrientation::right_tilted;
  if (down.x == up.x - 1) return LozengeOrientation::left_tilted;
  return LozengeOrientation::vertical;
}

std::array<Vertex, 4> Lozenge::outline() const {
  const auto a = vertices(first_);
  const auto b = vertices(second_);
  auto in = [](const std::array<Vertex, 3>& tri, Vertex v) {
    return std::find(tri.begin(), tri.end(), v) != tri.end();
  };
  Vertex apex_a{}, apex_b{};
  std::array<Vertex, 2> shared{};
  int k = 0;
  for (const auto& v : a) {
    if (in(b, v))
      shared[k++] = v;
    else
      apex_a = v;
  }
  for (const auto& v : b)
    if (!in(a, v)) apex_b = v;
  return {apex_a, shared[0], apex_b, shared[1]};
}

std::vector<int> Shape::declared_sides() const {
  if (kind == ShapeKind::hexagon || kind == ShapeKind::diamond) return {sides.front()};
  return sides;
}

int Shape::perimeter() const {
  int sum = 0;
  for (int s : sides) sum += s;
  return 2 * sum;
}

std::string to_string(ShapeKind k) {
  switch (k) {
    case ShapeKind::hexagon: return "hexagon";
    case ShapeKind::diamond: return "diamond";
    case ShapeKind::gen_hexagon: return "gen-hexagon";
    case ShapeKind::gen_diamond: return "gen-diamond";
  }
  return "?";
}

std::optional<ShapeKind> parse_shape_kind(const std::string& s) {
  for (auto k : {ShapeKind::hexagon, ShapeKind::diamond, ShapeKind::gen_hexagon, ShapeKind::gen_diamond})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

Shape make_shape(ShapeKind kind, const std::vector<int>& declared) {
  const std::size_t want = (kind == ShapeKind::gen_hexagon) ? 3 : (kind == ShapeKind::gen_diamond) ? 2 : 1;
  if (declared.size() != want)
    throw std::invalid_argument(to_string(kind) + " takes " + std::to_string(want) + " side length(s)");
  switch (kind) {
    case ShapeKind::hexagon: return Shape::hexagon(declared[0]);
    case ShapeKind::diamond: return Shape::diamond(declared[0]);
    case ShapeKind::gen_hexagon: return Shape::gen_hexagon(declared[0], declared[1], declared[2]);
    case ShapeKind::gen_diamond: return Shape::gen_diamond(declared[0], declared[1]);
  }
  throw std::invalid_argument("unknown shape");
}

bool Region::contains(TriangleId t) const { return std::binary_search(triangles.begin(), triangles.end(), t); }

namespace {

// Cross product of (b - a) and (p - a), all coordinates scaled by 3.
long cross3(Vertex a, Vertex b, long px, long py) {
  const long ax = 3L * a.x, ay = 3L * a.y, bx = 3L * b.x, by = 3L * b.y;
  return (bx - ax) * (py - ay) - (by - ay) * (px - ax);
}

// Centroids never lie on a lattice line, so a strict test suffices.
bool centroid_inside(const std::vector<Vertex>& ccw, TriangleId t) {
  const long px = 3L * t.x + (t.points_up ? 1 : 2);
  const long py = 3L * t.y + (t.points_up ? 1 : 2);
  for (std::size_t i = 0; i < ccw.size(); ++i)
    if (cross3(ccw[i], ccw[(i + 1) % ccw.size()], px, py) < 0) return false;
  return true;
}

}  // namespace

Region build_region(const Shape& shape) {
  std::vector<Vertex> dirs;
  std::vector<int> lengths;
  if (shape.is_hexagonal()) {
    if (shape.sides.size() != 3) throw std::invalid_argument("hexagon needs three side lengths");
    dirs = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    lengths = {shape.sides[0], shape.sides[1], shape.sides[2], shape.sides[0], shape.sides[1], shape.sides[2]};
  } else {
    if (shape.sides.size() != 2) throw std::invalid_argument("diamond needs two side lengths");
    dirs = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    lengths = {shape.sides[0], shape.sides[1], shape.sides[0], shape.sides[1]};
  }
  for (int len : lengths)
    if (len < 1) throw std::invalid_argument("side lengths must be at least 1");

  Region r;
  r.shape = shape;
  Vertex p{0, 0};
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    r.corners.push_back(p);
    for (int step = 0; step < lengths[i]; ++step) {
      r.boundary_vertices.push_back(p);
      p = p + dirs[i];
    }
  }

  int xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  for (const auto& c : r.corners) {
    xmin = std::min(xmin, c.x);
    xmax = std::max(xmax, c.x);
    ymin = std::min(ymin, c.y);
    ymax = std::max(ymax, c.y);
  }
  for (int x = xmin - 1; x <= xmax; ++x)
    for (int y = ymin - 1; y <= ymax; ++y)
      for (bool up : {false, true}) {
        const TriangleId t{x, y, up};
        if (centroid_inside(r.corners, t)) r.triangles.push_back(t);
      }
  std::sort(r.triangles.begin(), r.triangles.end());
  return r;
}

Region translate(const Region& r, Vertex offset) {
  Region out = r;
  for (auto& t : out.triangles) t = translate(t, offset);
  for (auto& v : out.corners) v = v + offset;
  for (auto& v : out.boundary_vertices) v = v + offset;
  return out;
}

Region rotate60(const Region& r) {
  Region out = r;
  for (auto& t : out.triangles) t = rotate60(t);
  std::sort(out.triangles.begin(), out.triangles.end());
  for (auto& v : out.corners) v = rotate60(v);
  for (auto& v : out.boundary_vertices) v = rotate60(v);
  return out;
}

std::vector<TriangleId> external_ring_triangles(const Region& r) {
  std::vector<TriangleId> ring;
  for (const auto& v : r.boundary_vertices)
    for (const auto& t : triangles_around(v))
      if (!r.contains(t)) ring.push_back(t);
  std::sort(ring.begin(), ring.end());
  ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
  return ring;
}

std::vector<Lozenge> candidate_lozenges(const Region& r) {
  // A lozenge touching the boundary has a triangle incident to a boundary
  // vertex, i.e. a ring triangle.
  std::vector<Lozenge> out;
  for (const auto& t : external_ring_triangles(r))
    for (const auto& m : adjacency(t))
      if (!r.contains(m)) out.emplace_back(t, m);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace corona
