#include "quanthelly/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hull3d.hpp"
#include "quanthelly/error.hpp"

namespace quanthelly {

Point operator+(const Point& a, const Point& b) {
  Vector c(a.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return Point(std::move(c));
}

Point operator-(const Point& a, const Point& b) {
  Vector c(a.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return Point(std::move(c));
}

Point operator*(const Scalar& s, const Point& p) {
  Vector c(p.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * p[i];
  return Point(std::move(c));
}

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: dimension mismatch");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Scalar dot(const Point& p, const Vector& v) { return dot(p.coords(), v); }

namespace {

bool all_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

// Positive factor turning v into a primitive integer vector.
Scalar primitive_scale(const Vector& v) {
  Vector p = primitive_integer_vector(v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return p[i] / v[i];
  }
  return 1;
}

}  // namespace

Halfspace::Halfspace(Vector normal, Scalar offset) {
  if (normal.empty() || all_zero(normal)) throw InvalidArgument("halfspace normal must be nonzero");
  Scalar k = primitive_scale(normal);
  for (auto& x : normal) x *= k;
  offset_ = offset * k;
  normal_ = std::move(normal);
}

Direction::Direction(Vector v) {
  if (v.empty() || all_zero(v)) throw InvalidArgument("direction must be nonzero");
  v_ = primitive_integer_vector(v);
}

Direction Direction::operator-() const {
  Vector n = v_;
  for (auto& x : n) x = -x;
  return Direction(std::move(n));
}

// ---------------------------------------------------------------------------
// Planar primitives

Scalar cross2d(const Point& a, const Point& b, const Point& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

int orient2d(const Point& a, const Point& b, const Point& c) {
  const double ax = a[0].get_d(), ay = a[1].get_d();
  const double bx = b[0].get_d(), by = b[1].get_d();
  const double cx = c[0].get_d(), cy = c[1].get_d();
  const double left = (bx - ax) * (cy - ay);
  const double right = (by - ay) * (cx - ax);
  const double det = left - right;
  const double bound =
      1e-14 * ((std::fabs(bx) + std::fabs(ax)) * (std::fabs(cy) + std::fabs(ay)) +
               (std::fabs(by) + std::fabs(ay)) * (std::fabs(cx) + std::fabs(ax))) +
      1e-290;
  if (std::isfinite(det) && std::isfinite(bound)) {
    if (det > bound) return 1;
    if (det < -bound) return -1;
  }
  return sgn(cross2d(a, b, c));
}

std::vector<Point> hull2d(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && orient2d(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient2d(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

Scalar shoelace2(std::span<const Point> poly) {
  Scalar s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    s += p[0] * q[1] - p[1] * q[0];
  }
  return s;
}

namespace {

void require_dim(std::size_t d) {
  if (d != 2 && d != 3) {
    throw DimensionError("only dimensions 2 and 3 are supported (got " + std::to_string(d) + ")");
  }
}

// Sutherland–Hodgman step for a convex polygon given in cyclic order (it may
// also be a single point or a segment). Result is canonical.
std::vector<Point> clip_polygon(const std::vector<Point>& poly, const Halfspace& h) {
  if (poly.empty()) return {};
  if (poly.size() == 1) return h.contains(poly[0]) ? poly : std::vector<Point>{};
  std::vector<Scalar> val(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) val[i] = dot(poly[i], h.normal()) - h.offset();
  std::vector<Point> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    std::size_t j = (i + 1) % poly.size();
    const bool in_i = val[i] <= 0;
    const bool in_j = val[j] <= 0;
    if (in_i) out.push_back(poly[i]);
    if (in_i != in_j) {
      Scalar t = val[i] / (val[i] - val[j]);
      out.push_back(poly[i] + t * (poly[j] - poly[i]));
    }
  }
  return hull2d(std::move(out));
}

std::vector<Halfspace> hrep_of_polygon(const std::vector<Point>& v) {
  std::vector<Halfspace> hs;
  if (v.empty()) return hs;
  if (v.size() == 1) {
    hs.emplace_back(Vector{1, 0}, v[0][0]);
    hs.emplace_back(Vector{-1, 0}, Scalar(-v[0][0]));
    hs.emplace_back(Vector{0, 1}, v[0][1]);
    hs.emplace_back(Vector{0, -1}, Scalar(-v[0][1]));
    return hs;
  }
  if (v.size() == 2) {
    Point d = v[1] - v[0];
    Vector n{d[1], Scalar(-d[0])};
    Scalar c = dot(v[0], n);
    hs.emplace_back(n, c);
    hs.emplace_back(Vector{-n[0], -n[1]}, Scalar(-c));
    hs.emplace_back(d.coords(), dot(v[1], d.coords()));
    hs.emplace_back(Vector{-d[0], -d[1]}, Scalar(-dot(v[0], d.coords())));
    return hs;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    Vector n{q[1] - p[1], p[0] - q[0]};
    Scalar c = dot(p, n);
    hs.emplace_back(std::move(n), std::move(c));
  }
  return hs;
}

Scalar max_abs_coordinate(const Point& p) {
  Scalar m = 0;
  for (std::size_t i = 0; i < p.dim(); ++i) m = std::max(m, abs_of(p[i]));
  return m;
}

}  // namespace

ConvexBody make_polygon(std::vector<Point> v) {
  ConvexBody b;
  b.dim_ = 2;
  b.bounded_ = true;
  if (v.empty()) {
    b.empty_ = true;
    b.affine_dim_ = -1;
    b.vertices_ = std::vector<Point>{};
    b.halfspaces_ = std::vector<Halfspace>{Halfspace(Vector{1, 0}, Scalar(-1)),
                                           Halfspace(Vector{-1, 0}, Scalar(-1))};
    return b;
  }
  b.empty_ = false;
  b.affine_dim_ = v.size() >= 3 ? 2 : static_cast<int>(v.size()) - 1;
  b.halfspaces_ = hrep_of_polygon(v);
  b.vertices_ = std::move(v);
  return b;
}

ConvexBody make_planar(std::vector<Halfspace> hs) {
  for (const auto& h : hs) {
    if (h.dim() != 2) throw DimensionError("planar halfspace of dimension " + std::to_string(h.dim()));
  }
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());

  ConvexBody b;
  b.dim_ = 2;
  if (hs.empty()) {
    b.empty_ = false;
    b.bounded_ = false;
    b.affine_dim_ = 2;
    b.halfspaces_ = std::vector<Halfspace>{};
    b.window_ = {Point{-1, -1}, Point{1, -1}, Point{1, 1}, Point{-1, 1}};
    b.rays_ = {Vector{1, 0}, Vector{-1, 0}, Vector{0, 1}, Vector{0, -1}};
    return b;
  }

  // A box strictly containing every vertex and every boundary-line foot
  // point meets the body whenever the body is nonempty, and meets its
  // interior whenever the interior is nonempty.
  Scalar radius = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const Vector& a = hs[i].normal();
    Scalar t = hs[i].offset() / dot(a, a);
    radius = std::max(radius, max_abs_coordinate(Point{t * a[0], t * a[1]}));
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      const Vector& c = hs[j].normal();
      Scalar det = a[0] * c[1] - a[1] * c[0];
      if (det == 0) continue;
      Point x{(hs[i].offset() * c[1] - a[1] * hs[j].offset()) / det,
              (a[0] * hs[j].offset() - hs[i].offset() * c[0]) / det};
      radius = std::max(radius, max_abs_coordinate(x));
    }
  }
  radius += 1;
  std::vector<Point> poly{Point{-radius, -radius}, Point{radius, -radius}, Point{radius, radius},
                          Point{-radius, radius}};
  for (const auto& h : hs) {
    poly = clip_polygon(poly, h);
    if (poly.empty()) return make_polygon({});
  }

  // Recession cone {y : <a_i, y> <= 0}; its extreme rays are among the
  // boundary directions and, for a halfplane cone, the inward normal.
  std::set<Vector> rays;
  auto consider = [&](Vector y) {
    for (const auto& h : hs) {
      if (dot(h.normal(), y) > 0) return;
    }
    rays.insert(primitive_integer_vector(y));
  };
  for (const auto& h : hs) {
    const Vector& a = h.normal();
    consider(Vector{-a[1], a[0]});
    consider(Vector{a[1], -a[0]});
    consider(Vector{-a[0], -a[1]});
  }
  if (rays.empty()) return make_polygon(std::move(poly));

  b.empty_ = false;
  b.bounded_ = false;
  b.affine_dim_ = poly.size() >= 3 ? 2 : 1;
  std::vector<Halfspace> kept;
  for (const auto& h : hs) {
    bool keep = false;
    for (std::size_t i = 0; i < poly.size() && !keep; ++i) {
      if (!h.on_boundary(poly[i])) continue;
      if (b.affine_dim_ < 2 || h.on_boundary(poly[(i + 1) % poly.size()])) keep = true;
    }
    if (keep) kept.push_back(h);
  }
  b.halfspaces_ = std::move(kept);
  b.window_ = std::move(poly);
  b.rays_.assign(rays.begin(), rays.end());
  return b;
}

ConvexBody convex_hull(std::span<const Point> points) {
  if (points.empty()) throw InvalidArgument("convex_hull: empty input");
  const std::size_t d = points[0].dim();
  require_dim(d);
  for (const auto& p : points) {
    if (p.dim() != d) throw DimensionError("convex_hull: mixed point dimensions");
  }
  if (d == 2) return make_polygon(hull2d(std::vector<Point>(points.begin(), points.end())));
  detail::Hull3 h = detail::hull3d(points);
  ConvexBody b;
  b.dim_ = 3;
  b.empty_ = false;
  b.bounded_ = true;
  b.affine_dim_ = h.affine_dim;
  b.vertices_ = std::move(h.vertices);
  b.halfspaces_ = std::move(h.halfspaces);
  return b;
}

ConvexBody ConvexBody::empty(int dim) {
  require_dim(static_cast<std::size_t>(dim));
  if (dim == 2) return make_polygon({});
  ConvexBody b;
  b.dim_ = dim;
  b.vertices_ = std::vector<Point>{};
  Vector e(3, Scalar(0));
  e[0] = 1;
  Vector f(3, Scalar(0));
  f[0] = -1;
  b.halfspaces_ = std::vector<Halfspace>{Halfspace(e, Scalar(-1)), Halfspace(f, Scalar(-1))};
  return b;
}

ConvexBody ConvexBody::whole_space(int dim) {
  if (dim != 2) throw Unsupported("whole_space: only the plane is supported");
  return make_planar({});
}

ConvexBody ConvexBody::point(const Point& p) { return convex_hull(std::span<const Point>(&p, 1)); }

ConvexBody ConvexBody::box(const Point& lo, const Point& hi) {
  if (lo.dim() != hi.dim()) throw DimensionError("box: corner dimensions differ");
  require_dim(lo.dim());
  std::vector<Point> corners;
  const std::size_t d = lo.dim();
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    Vector c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = (mask >> i) & 1u ? hi[i] : lo[i];
    corners.emplace_back(std::move(c));
  }
  return convex_hull(corners);
}

ConvexBody ConvexBody::from_halfspaces(int dim, std::vector<Halfspace> halfspaces) {
  if (dim != 2) throw Unsupported("from_halfspaces: H-representation input is supported in the plane only");
  return make_planar(std::move(halfspaces));
}

const std::vector<Point>& ConvexBody::vertex_list() const {
  if (!vertices_) throw Unsupported("body is unbounded and has no vertex list");
  return *vertices_;
}

std::vector<Halfspace> ConvexBody::h_rep() const {
  if (halfspaces_) return *halfspaces_;
  if (dim_ == 2 && vertices_) return hrep_of_polygon(*vertices_);
  throw Unsupported("no H-representation available");
}

bool operator==(const ConvexBody& a, const ConvexBody& b) {
  if (a.dim_ != b.dim_ || a.empty_ != b.empty_) return false;
  if (a.empty_) return true;
  if (a.bounded_ != b.bounded_) return false;
  if (a.bounded_) return a.vertices_ == b.vertices_;
  return a.halfspaces_ == b.halfspaces_;
}

ConvexBody intersect(std::span<const ConvexBody> bodies) {
  if (bodies.empty()) throw InvalidArgument("intersect: empty list");
  const int d = bodies[0].dim();
  for (const auto& b : bodies) {
    if (b.dim() != d) throw DimensionError("intersect: mixed dimensions");
  }
  for (const auto& b : bodies) {
    if (b.is_empty()) return ConvexBody::empty(d);
  }
  if (bodies.size() == 1) return bodies[0];
  if (d != 2) throw Unsupported("intersect: only supported in the plane");
  // Intersecting bounded polygons by successive clipping keeps the vertex
  // representation exact and avoids the window construction.
  std::vector<const ConvexBody*> order;
  for (const auto& b : bodies) order.push_back(&b);
  auto first_bounded = std::find_if(order.begin(), order.end(), [](const ConvexBody* b) { return b->bounded(); });
  if (first_bounded != order.end()) {
    std::vector<Point> poly = *(*first_bounded)->vertices();
    for (const auto* b : order) {
      if (b == *first_bounded) continue;
      for (const auto& h : b->h_rep()) {
        poly = clip_polygon(poly, h);
        if (poly.empty()) return make_polygon({});
      }
    }
    return make_polygon(std::move(poly));
  }
  std::vector<Halfspace> hs;
  for (const auto* b : order) {
    auto h = b->h_rep();
    hs.insert(hs.end(), h.begin(), h.end());
  }
  return make_planar(std::move(hs));
}

ConvexBody intersect(const ConvexBody& a, const ConvexBody& b) {
  const ConvexBody both[] = {a, b};
  return intersect(std::span<const ConvexBody>(both));
}

ConvexBody clip(const ConvexBody& body, const Halfspace& h) {
  if (body.dim() != static_cast<int>(h.dim())) throw DimensionError("clip: dimension mismatch");
  if (body.dim() != 2) throw Unsupported("clip: only supported in the plane");
  if (body.is_empty()) return body;
  if (body.bounded()) return make_polygon(clip_polygon(*body.vertices(), h));
  auto hs = body.h_rep();
  hs.push_back(h);
  return make_planar(std::move(hs));
}

bool contains(const ConvexBody& body, const Point& p) {
  if (static_cast<int>(p.dim()) != body.dim()) throw DimensionError("contains: dimension mismatch");
  if (body.is_empty()) return false;
  for (const auto& h : body.h_rep()) {
    if (!h.contains(p)) return false;
  }
  return true;
}

bool is_subset(const ConvexBody& inner, const ConvexBody& outer) {
  if (inner.dim() != outer.dim()) throw DimensionError("is_subset: dimension mismatch");
  if (inner.is_empty()) return true;
  if (outer.is_empty()) return false;
  const auto outer_h = outer.h_rep();
  const auto& pts = inner.bounded() ? *inner.vertices() : inner.window();
  for (const auto& p : pts) {
    for (const auto& h : outer_h) {
      if (!h.contains(p)) return false;
    }
  }
  for (const auto& r : inner.rays()) {
    for (const auto& h : outer_h) {
      if (dot(h.normal(), r) > 0) return false;
    }
  }
  return true;
}

SupportValue support(const ConvexBody& body, const Vector& v) {
  if (static_cast<int>(v.size()) != body.dim()) throw DimensionError("support: dimension mismatch");
  if (body.is_empty()) throw InvalidArgument("support of the empty body");
  for (const auto& r : body.rays()) {
    if (dot(r, v) > 0) return {true, Scalar(0)};
  }
  const auto& pts = body.bounded() ? *body.vertices() : body.window();
  Scalar best = dot(pts[0], v);
  for (const auto& p : pts) best = std::max(best, dot(p, v));
  return {false, best};
}

SupportValue support(const ConvexBody& body, const Direction& v) { return support(body, v.vector()); }

std::vector<Simplex> triangulate(const ConvexBody& body) {
  if (!body.bounded()) throw Unsupported("triangulate: body is unbounded");
  if (body.is_empty()) return {};
  const auto& v = *body.vertices();
  if (body.affine_dim() < body.dim() && body.dim() == 2) return {v};
  std::vector<Simplex> out;
  if (body.dim() == 2) {
    for (std::size_t i = 1; i + 1 < v.size(); ++i) out.push_back({v[0], v[i], v[i + 1]});
    return out;
  }
  detail::Hull3 h = detail::hull3d(v);
  if (h.affine_dim < 2) return {h.vertices};
  if (h.affine_dim == 2) {
    for (const auto& t : h.triangles) out.push_back({t[0], t[1], t[2]});
    return out;
  }
  const Point& apex = h.vertices[0];
  for (const auto& t : h.triangles) {
    if (t[0] == apex || t[1] == apex || t[2] == apex) continue;
    out.push_back({apex, t[0], t[1], t[2]});
  }
  return out;
}

Scalar simplex_volume(const Simplex& s) {
  if (s.empty()) return 0;
  const std::size_t d = s[0].dim();
  if (s.size() != d + 1) return 0;
  if (d == 2) return abs_of(cross2d(s[0], s[1], s[2])) / 2;
  if (d == 3) {
    Point a = s[1] - s[0], b = s[2] - s[0], c = s[3] - s[0];
    Scalar det = dot(a.coords(), detail::cross3(b.coords(), c.coords()));
    return abs_of(det) / 6;
  }
  throw DimensionError("simplex_volume: unsupported dimension");
}

}  // namespace quanthelly
