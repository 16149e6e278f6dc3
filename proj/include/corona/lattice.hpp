#pragma once

// Triangular lattice geometry: unit triangles, lozenges, and the convex
// regions whose coronas we count.
//
// Lattice basis: e0 = (1, 0), e1 = (1/2, sqrt(3)/2). A lattice vertex (x, y)
// sits at x*e0 + y*e1 in the plane.
//
//   U(x,y) has corners (x,y), (x+1,y), (x,y+1)        (points up)
//   D(x,y) has corners (x+1,y), (x,y+1), (x+1,y+1)    (points down)

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace corona {

struct Vertex {
  int x = 0;
  int y = 0;

  constexpr auto operator<=>(const Vertex&) const = default;
  constexpr Vertex operator+(Vertex o) const { return {x + o.x, y + o.y}; }
  constexpr Vertex operator-(Vertex o) const { return {x - o.x, y - o.y}; }
};

struct TriangleId {
  int x = 0;
  int y = 0;
  bool points_up = true;

  // Lexicographic by (x, y, points_up), down before up.
  constexpr auto operator<=>(const TriangleId&) const = default;

  static constexpr TriangleId up(int x, int y) { return {x, y, true}; }
  static constexpr TriangleId down(int x, int y) { return {x, y, false}; }
};

std::array<Vertex, 3> vertices(TriangleId t);

/// The three edge-adjacent triangles. For U(x,y) this is
/// [D(x,y), D(x-1,y), D(x,y-1)]; for D(x,y) it is [U(x,y), U(x+1,y), U(x,y+1)].
std::array<TriangleId, 3> adjacency(TriangleId t);

/// The six triangles meeting at a lattice vertex.
std::array<TriangleId, 6> triangles_around(Vertex v);

/// Number of vertices two triangles have in common (0..3).
int shared_vertex_count(TriangleId a, TriangleId b);

bool edge_adjacent(TriangleId a, TriangleId b);

/// Recovers the triangle with the given corner set, if those three vertices
/// form a unit triangle.
std::optional<TriangleId> triangle_from_vertices(std::array<Vertex, 3> corners);

// Rotation by +60 degrees about the origin, in lattice coordinates.
constexpr Vertex rotate60(Vertex v) { return {-v.y, v.x + v.y}; }
TriangleId rotate60(TriangleId t);
TriangleId translate(TriangleId t, Vertex offset);

enum class LozengeOrientation { left_tilted, right_tilted, vertical };

std::string to_string(LozengeOrientation o);

class Lozenge {
 public:
  /// Throws std::invalid_argument unless a and b are edge-adjacent.
  Lozenge(TriangleId a, TriangleId b);

  TriangleId first() const { return first_; }
  TriangleId second() const { return second_; }

  LozengeOrientation orientation() const;

  /// Corner vertices in cyclic order around the lozenge.
  std::array<Vertex, 4> outline() const;

  bool contains(TriangleId t) const { return t == first_ || t == second_; }
  bool overlaps(const Lozenge& o) const { return contains(o.first_) || contains(o.second_); }

  auto operator<=>(const Lozenge&) const = default;

 private:
  TriangleId first_;
  TriangleId second_;
};

enum class ShapeKind { hexagon, diamond, gen_hexagon, gen_diamond };

/// Shape family plus side lengths. Hexagon(n) and Diamond(n) keep their own
/// kind for naming but carry the expanded side list (n,n,n) / (n,n).
struct Shape {
  ShapeKind kind = ShapeKind::hexagon;
  std::vector<int> sides;

  static Shape hexagon(int n) { return {ShapeKind::hexagon, {n, n, n}}; }
  static Shape diamond(int n) { return {ShapeKind::diamond, {n, n}}; }
  static Shape gen_hexagon(int n1, int n2, int n3) { return {ShapeKind::gen_hexagon, {n1, n2, n3}}; }
  static Shape gen_diamond(int n1, int n2) { return {ShapeKind::gen_diamond, {n1, n2}}; }

  bool is_hexagonal() const { return kind == ShapeKind::hexagon || kind == ShapeKind::gen_hexagon; }

  /// Side lengths as given by the user: one entry for the regular shapes.
  std::vector<int> declared_sides() const;

  /// Sum of all side lengths around the polygon.
  int perimeter() const;

  bool operator==(const Shape&) const = default;
};

std::string to_string(ShapeKind k);
std::optional<ShapeKind> parse_shape_kind(const std::string& s);

/// Builds a shape from a kind and the user-declared side list. Throws
/// std::invalid_argument if the arity is wrong.
Shape make_shape(ShapeKind kind, const std::vector<int>& declared);

struct Region {
  Shape shape;
  std::vector<TriangleId> triangles;     // sorted
  std::vector<Vertex> corners;           // counterclockwise from bottom-left
  std::vector<Vertex> boundary_vertices; // counterclockwise from bottom-left

  bool contains(TriangleId t) const;
};

/// Throws std::invalid_argument on any side length < 1.
Region build_region(const Shape& shape);

Region translate(const Region& r, Vertex offset);
Region rotate60(const Region& r);

/// Triangles outside the region that touch its boundary in at least one
/// vertex. Sorted.
std::vector<TriangleId> external_ring_triangles(const Region& r);

/// Lozenges disjoint from the region with at least one vertex on its
/// boundary. Sorted.
std::vector<Lozenge> candidate_lozenges(const Region& r);

}  // namespace corona
