#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "quanthelly/scalar.hpp"

namespace quanthelly {

using Vector = std::vector<Scalar>;

class Point {
 public:
  Point() = default;
  explicit Point(Vector coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Scalar> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const Vector& coords() const { return coords_; }

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  // Lexicographic.
  friend bool operator<(const Point& a, const Point& b) { return a.coords_ < b.coords_; }

 private:
  Vector coords_;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Scalar& s, const Point& p);
Scalar dot(const Point& p, const Vector& v);
Scalar dot(const Vector& a, const Vector& b);

/// Closed halfspace {x : <x, normal> <= offset}. The normal is stored scaled
/// to a primitive integer vector so equal halfspaces compare equal.
class Halfspace {
 public:
  Halfspace(Vector normal, Scalar offset);

  const Vector& normal() const { return normal_; }
  const Scalar& offset() const { return offset_; }
  std::size_t dim() const { return normal_.size(); }

  bool contains(const Point& p) const { return dot(p, normal_) <= offset_; }
  bool on_boundary(const Point& p) const { return dot(p, normal_) == offset_; }

  friend bool operator==(const Halfspace& a, const Halfspace& b) {
    return a.normal_ == b.normal_ && a.offset_ == b.offset_;
  }
  friend bool operator<(const Halfspace& a, const Halfspace& b) {
    if (a.normal_ != b.normal_) return a.normal_ < b.normal_;
    return a.offset_ < b.offset_;
  }

 private:
  Vector normal_;
  Scalar offset_;
};

/// Nonzero direction stored as a primitive integer vector. Only positive
/// rescaling is canonicalized, so v and -v remain distinct directions.
class Direction {
 public:
  explicit Direction(Vector v);
  Direction(std::initializer_list<Scalar> v) : Direction(Vector(v)) {}

  const Vector& vector() const { return v_; }
  std::size_t dim() const { return v_.size(); }
  Direction operator-() const;

  friend bool operator==(const Direction& a, const Direction& b) { return a.v_ == b.v_; }
  friend bool operator<(const Direction& a, const Direction& b) { return a.v_ < b.v_; }

 private:
  Vector v_;
};

/// Convex polytope (possibly empty, lower-dimensional or, in the plane,
/// unbounded). Bodies are immutable values; build them through
/// convex_hull/from_halfspaces or the named constructors.
///
/// Plane bodies always carry an H-representation. Bounded bodies carry
/// their vertices in canonical order: lexicographic minimum first, then
/// counterclockwise, with no repeated or collinear-interior vertices.
/// Unbounded plane bodies carry a window (the body clipped to a box that
/// strictly contains every vertex) plus recession-cone generators, so that
/// body = window + cone(rays).
class ConvexBody {
 public:
  ConvexBody() = default;

  static ConvexBody empty(int dim);
  static ConvexBody whole_space(int dim);
  static ConvexBody point(const Point& p);
  /// Axis-parallel box [lo, hi] (componentwise, lo <= hi).
  static ConvexBody box(const Point& lo, const Point& hi);
  static ConvexBody from_halfspaces(int dim, std::vector<Halfspace> halfspaces);

  int dim() const { return dim_; }
  bool is_empty() const { return empty_; }
  bool bounded() const { return bounded_; }
  /// -1 for the empty body, otherwise the dimension of the affine hull.
  int affine_dim() const { return affine_dim_; }

  const std::optional<std::vector<Point>>& vertices() const { return vertices_; }
  const std::optional<std::vector<Halfspace>>& halfspaces() const { return halfspaces_; }

  /// Vertices, throwing Unsupported for unbounded bodies.
  const std::vector<Point>& vertex_list() const;
  /// H-representation, derived from the vertices when not stored.
  std::vector<Halfspace> h_rep() const;

  /// Unbounded plane bodies only (empty otherwise).
  const std::vector<Point>& window() const { return window_; }
  const std::vector<Vector>& rays() const { return rays_; }

  friend bool operator==(const ConvexBody& a, const ConvexBody& b);
  friend bool operator!=(const ConvexBody& a, const ConvexBody& b) { return !(a == b); }

 private:
  friend ConvexBody convex_hull(std::span<const Point> points);
  friend ConvexBody make_planar(std::vector<Halfspace> halfspaces);
  friend ConvexBody make_polygon(std::vector<Point> canonical_vertices);

  int dim_ = 0;
  bool empty_ = true;
  bool bounded_ = true;
  int affine_dim_ = -1;
  std::optional<std::vector<Point>> vertices_;
  std::optional<std::vector<Halfspace>> halfspaces_;
  std::vector<Point> window_;
  std::vector<Vector> rays_;
};

/// Convex hull of a finite point set in dimension 2 or 3. Degenerate
/// (lower-dimensional) hulls are allowed and reported via affine_dim().
ConvexBody convex_hull(std::span<const Point> points);
inline ConvexBody convex_hull(std::initializer_list<Point> points) {
  return convex_hull(std::span<const Point>(points.begin(), points.size()));
}

/// Intersection of bodies in the plane. Empty list is not allowed.
ConvexBody intersect(std::span<const ConvexBody> bodies);
ConvexBody intersect(const ConvexBody& a, const ConvexBody& b);

/// body ∩ h (plane only).
ConvexBody clip(const ConvexBody& body, const Halfspace& h);

/// Closed containment.
bool contains(const ConvexBody& body, const Point& p);

/// inner ⊆ outer as point sets.
bool is_subset(const ConvexBody& inner, const ConvexBody& outer);

struct SupportValue {
  bool infinite = false;
  Scalar value;
};
/// max over the body of <x, v>.
SupportValue support(const ConvexBody& body, const Direction& v);
SupportValue support(const ConvexBody& body, const Vector& v);

/// Simplex as its vertex list (1 point, 2 points, triangle or tetrahedron).
using Simplex = std::vector<Point>;

/// Fan triangulation from the first vertex. Bounded bodies only.
std::vector<Simplex> triangulate(const ConvexBody& body);

/// Unsigned d-volume of a full-dimensional simplex (0 for degenerate ones).
Scalar simplex_volume(const Simplex& s);

/// Sign of the orientation determinant of (a, b, c): +1 counterclockwise.
/// Uses a floating-point filter with exact fallback.
int orient2d(const Point& a, const Point& b, const Point& c);
/// Exact doubled signed area of the triangle (a, b, c).
Scalar cross2d(const Point& a, const Point& b, const Point& c);

/// Counterclockwise hull of planar points (Andrew's monotone chain), lexicographic
/// minimum first, collinear points dropped.
std::vector<Point> hull2d(std::vector<Point> points);

/// Doubled signed shoelace area of a closed planar polygon.
Scalar shoelace2(std::span<const Point> polygon);

}  // namespace quanthelly
