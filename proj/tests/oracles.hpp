#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check: geometry is redone from polygon corners with
// closed-polygon vertex tests, and matrix products use dense int64
// coefficient vectors.

#include "corona/lattice.hpp"
#include "corona/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using corona::TriangleId;
using corona::Vertex;

inline std::array<Vertex, 3> corners_of(TriangleId t) {
  if (t.points_up) return {Vertex{t.x, t.y}, Vertex{t.x + 1, t.y}, Vertex{t.x, t.y + 1}};
  return {Vertex{t.x + 1, t.y}, Vertex{t.x, t.y + 1}, Vertex{t.x + 1, t.y + 1}};
}

inline long cross(Vertex a, Vertex b, Vertex p) {
  return static_cast<long>(b.x - a.x) * (p.y - a.y) - static_cast<long>(b.y - a.y) * (p.x - a.x);
}

/// Closed convex polygon (counterclockwise corners) membership.
inline bool in_closed_polygon(const std::vector<Vertex>& ccw, Vertex p) {
  for (std::size_t i = 0; i < ccw.size(); ++i)
    if (cross(ccw[i], ccw[(i + 1) % ccw.size()], p) < 0) return false;
  return true;
}

inline bool on_boundary(const std::vector<Vertex>& ccw, Vertex p) {
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const Vertex a = ccw[i], b = ccw[(i + 1) % ccw.size()];
    if (cross(a, b, p) != 0) continue;
    if (std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
        p.y <= std::max(a.y, b.y))
      return true;
  }
  return false;
}

/// A unit triangle lies in a convex lattice polygon iff all its corners do.
inline bool triangle_inside(const std::vector<Vertex>& ccw, TriangleId t) {
  for (auto v : corners_of(t))
    if (!in_closed_polygon(ccw, v)) return false;
  return true;
}

/// All triangles within `pad` of the polygon's lattice bounding box.
inline std::vector<TriangleId> box(const std::vector<Vertex>& ccw, int pad) {
  int x0 = ccw[0].x, x1 = x0, y0 = ccw[0].y, y1 = y0;
  for (auto v : ccw) {
    x0 = std::min(x0, v.x);
    x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y);
    y1 = std::max(y1, v.y);
  }
  std::vector<TriangleId> out;
  for (int x = x0 - pad; x <= x1 + pad; ++x)
    for (int y = y0 - pad; y <= y1 + pad; ++y) {
      out.push_back({x, y, true});
      out.push_back({x, y, false});
    }
  return out;
}

inline std::set<TriangleId> region_triangles(const std::vector<Vertex>& ccw) {
  std::set<TriangleId> out;
  for (auto t : box(ccw, 2))
    if (triangle_inside(ccw, t)) out.insert(t);
  return out;
}

inline bool touches_boundary(const std::vector<Vertex>& ccw, TriangleId t) {
  for (auto v : corners_of(t))
    if (on_boundary(ccw, v)) return true;
  return false;
}

inline std::set<TriangleId> ring(const std::vector<Vertex>& ccw) {
  const auto inside = region_triangles(ccw);
  std::set<TriangleId> out;
  for (auto t : box(ccw, 3))
    if (!inside.count(t) && touches_boundary(ccw, t)) out.insert(t);
  return out;
}

inline int shared(TriangleId a, TriangleId b) {
  int n = 0;
  for (auto p : corners_of(a))
    for (auto q : corners_of(b))
      if (p == q) ++n;
  return n;
}

/// Quadratic scan over all triangle pairs near the polygon.
inline std::set<std::pair<TriangleId, TriangleId>> candidate_pairs(const std::vector<Vertex>& ccw) {
  const auto inside = region_triangles(ccw);
  const auto all = box(ccw, 3);
  std::set<std::pair<TriangleId, TriangleId>> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const TriangleId a = all[i], b = all[j];
      if (shared(a, b) != 2 || inside.count(a) || inside.count(b)) continue;
      if (!touches_boundary(ccw, a) && !touches_boundary(ccw, b)) continue;
      out.insert(std::minmax(a, b));
    }
  return out;
}

// Dense polynomial: coefficient of x^i at index i.
using Dense = std::vector<std::int64_t>;
using DenseMatrix = std::vector<std::vector<Dense>>;

inline Dense dense_mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline Dense dense_add(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

inline DenseMatrix dense_matmul(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.size(), std::vector<Dense>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] = dense_add(out[i][j], dense_mul(a[i][k], b[k][j]));
  return out;
}

inline corona::Polynomial from_dense(const Dense& d) {
  corona::Polynomial p;
  for (std::size_t i = 0; i < d.size(); ++i) p += corona::Polynomial::monomial(d[i], static_cast<unsigned>(i));
  return p;
}

inline corona::PolyMatrix from_dense(const DenseMatrix& m) {
  corona::PolyMatrix out(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) out.at(i, j) = from_dense(m[i][j]);
  return out;
}

/// Minimal XML well-formedness check: balanced, properly nested elements,
/// quoted attributes. Returns the number of <polygon> elements, or -1.
inline int svg_polygon_count(const std::string& doc) {
  std::vector<std::string> stack;
  int polygons = 0;
  std::size_t i = 0;
  bool saw_root = false;
  while ((i = doc.find('<', i)) != std::string::npos) {
    const std::size_t end = doc.find('>', i);
    if (end == std::string::npos) return -1;
    std::string tag = doc.substr(i + 1, end - i - 1);
    i = end + 1;
    if (tag.empty()) return -1;
    if (tag.front() == '?') {
      if (tag.back() != '?') return -1;
      continue;
    }
    if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return -1;
    if (tag.front() == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return -1;
      stack.pop_back();
      continue;
    }
    const bool self_closing = tag.back() == '/';
    const std::string name = tag.substr(0, tag.find_first_of(" /"));
    if (stack.empty()) {
      if (saw_root || name != "svg") return -1;
      saw_root = true;
    }
    if (name == "polygon") ++polygons;
    if (!self_closing) stack.push_back(name);
  }
  return (saw_root && stack.empty()) ? polygons : -1;
}

}  // namespace oracle
