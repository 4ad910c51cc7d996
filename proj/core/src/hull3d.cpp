#include "hull3d.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "quanthelly/error.hpp"

namespace quanthelly::detail {

namespace {

Vector diff(const Point& a, const Point& b) {
  Vector v(3);
  for (int i = 0; i < 3; ++i) v[i] = a[i] - b[i];
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

struct Face {
  int a, b, c;
  Vector normal;
  Scalar offset;
  bool alive = true;
};

Face make_face(const std::vector<Point>& pts, int a, int b, int c) {
  Face f{a, b, c, cross3(diff(pts[b], pts[a]), diff(pts[c], pts[a])), 0};
  f.offset = dot(pts[a], f.normal);
  return f;
}

Scalar side(const Face& f, const Point& p) { return dot(p, f.normal) - f.offset; }

int rank_of(const std::vector<Vector>& vs) {
  const Vector* first = nullptr;
  for (const auto& v : vs) {
    if (!is_zero(v)) {
      first = &v;
      break;
    }
  }
  if (!first) return 0;
  const Vector* second = nullptr;
  for (const auto& v : vs) {
    if (!is_zero(cross3(*first, v))) {
      second = &v;
      break;
    }
  }
  if (!second) return 1;
  Vector n = cross3(*first, *second);
  for (const auto& v : vs) {
    if (dot(n, v) != 0) return 3;
  }
  return 2;
}

// Halfspaces describing a planar convex polygon (ccw or cw) embedded in 3D.
std::vector<Halfspace> planar_hrep(const std::vector<Point>& poly, const Vector& n) {
  std::vector<Halfspace> hs;
  Scalar c = dot(poly[0], n);
  hs.emplace_back(n, c);
  Vector neg(3);
  for (int i = 0; i < 3; ++i) neg[i] = -n[i];
  hs.emplace_back(neg, Scalar(-c));
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    Vector en = cross3(diff(b, a), n);
    Scalar off = dot(a, en);
    // Orient outward: some other vertex must lie on the inner side.
    for (const auto& q : poly) {
      Scalar s = dot(q, en) - off;
      if (s > 0) {
        for (auto& x : en) x = -x;
        off = -off;
        break;
      }
      if (s < 0) break;
    }
    hs.emplace_back(en, off);
  }
  return hs;
}

}  // namespace

Vector cross3(const Vector& a, const Vector& b) {
  return Vector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Hull3 hull3d(std::span<const Point> input) {
  std::vector<Point> pts(input.begin(), input.end());
  for (const auto& p : pts) {
    if (p.dim() != 3) throw DimensionError("hull3d: point of dimension " + std::to_string(p.dim()));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Hull3 out;
  if (pts.empty()) return out;

  const int n = static_cast<int>(pts.size());
  int i1 = -1, i2 = -1, i3 = -1;
  for (int i = 1; i < n && i1 < 0; ++i) i1 = i;
  if (i1 < 0) {
    out.affine_dim = 0;
    out.vertices = pts;
    const Point& p = pts[0];
    for (int k = 0; k < 3; ++k) {
      Vector e(3, Scalar(0));
      e[k] = 1;
      out.halfspaces.emplace_back(e, p[k]);
      e[k] = -1;
      out.halfspaces.emplace_back(e, Scalar(-p[k]));
    }
    return out;
  }
  const Vector u = diff(pts[i1], pts[0]);
  for (int i = 1; i < n && i2 < 0; ++i) {
    if (!is_zero(cross3(u, diff(pts[i], pts[0])))) i2 = i;
  }
  if (i2 < 0) {
    // Collinear: the extremes along u are the lexicographic min and max.
    out.affine_dim = 1;
    auto by_u = [&](const Point& a, const Point& b) { return dot(a, u) < dot(b, u); };
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), by_u);
    out.vertices = {*lo, *hi};
    std::sort(out.vertices.begin(), out.vertices.end());
    Vector seed(3, Scalar(0));
    seed[u[0] != 0 ? 1 : 0] = 1;
    Vector n1 = cross3(u, seed);
    Vector n2 = cross3(u, n1);
    for (const auto& nn : {n1, n2}) {
      Scalar c = dot(*lo, nn);
      out.halfspaces.emplace_back(nn, c);
      Vector neg{-nn[0], -nn[1], -nn[2]};
      out.halfspaces.emplace_back(neg, Scalar(-c));
    }
    out.halfspaces.emplace_back(u, dot(*hi, u));
    out.halfspaces.emplace_back(Vector{-u[0], -u[1], -u[2]}, Scalar(-dot(*lo, u)));
    return out;
  }
  const Vector normal = cross3(u, diff(pts[i2], pts[0]));
  for (int i = 1; i < n && i3 < 0; ++i) {
    if (dot(normal, diff(pts[i], pts[0])) != 0) i3 = i;
  }
  if (i3 < 0) {
    // Coplanar: hull in a coordinate projection, then lift back.
    out.affine_dim = 2;
    int drop = 0;
    for (int k = 0; k < 3; ++k) {
      if (normal[k] != 0) {
        drop = k;
        break;
      }
    }
    std::map<Point, Point> lift;
    std::vector<Point> flat;
    for (const auto& p : pts) {
      Vector c;
      for (int k = 0; k < 3; ++k) {
        if (k != drop) c.push_back(p[k]);
      }
      Point q(c);
      lift.emplace(q, p);
      flat.push_back(q);
    }
    std::vector<Point> poly;
    for (const auto& q : hull2d(flat)) poly.push_back(lift.at(q));
    for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
      out.triangles.push_back({poly[0], poly[i], poly[i + 1]});
    }
    out.halfspaces = planar_hrep(poly, normal);
    out.vertices = poly;
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
  }

  out.affine_dim = 3;
  std::vector<Face> faces;
  const std::array<int, 4> tet{0, i1, i2, i3};
  for (int skip = 0; skip < 4; ++skip) {
    std::array<int, 3> t{};
    int k = 0;
    for (int j = 0; j < 4; ++j) {
      if (j != skip) t[k++] = tet[j];
    }
    Face f = make_face(pts, t[0], t[1], t[2]);
    if (side(f, pts[tet[skip]]) > 0) f = make_face(pts, t[0], t[2], t[1]);
    faces.push_back(std::move(f));
  }
  std::vector<bool> in_tet(n, false);
  for (int v : tet) in_tet[v] = true;

  for (int p = 0; p < n; ++p) {
    if (in_tet[p]) continue;
    std::vector<int> visible;
    for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
      if (faces[fi].alive && side(faces[fi], pts[p]) > 0) visible.push_back(fi);
    }
    if (visible.empty()) continue;
    std::set<std::pair<int, int>> visible_edges;
    for (int fi : visible) {
      const Face& f = faces[fi];
      visible_edges.insert({f.a, f.b});
      visible_edges.insert({f.b, f.c});
      visible_edges.insert({f.c, f.a});
    }
    std::vector<std::pair<int, int>> horizon;
    for (const auto& [a, b] : visible_edges) {
      if (!visible_edges.count({b, a})) horizon.emplace_back(a, b);
    }
    for (int fi : visible) faces[fi].alive = false;
    for (const auto& [a, b] : horizon) faces.push_back(make_face(pts, a, b, p));
  }

  std::map<int, std::vector<Vector>> incident;
  std::set<Halfspace> planes;
  for (const auto& f : faces) {
    if (!f.alive) continue;
    out.triangles.push_back({pts[f.a], pts[f.b], pts[f.c]});
    for (int v : {f.a, f.b, f.c}) incident[v].push_back(f.normal);
    planes.insert(Halfspace(f.normal, f.offset));
  }
  for (auto& [v, normals] : incident) {
    if (rank_of(normals) == 3) out.vertices.push_back(pts[v]);
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.halfspaces.assign(planes.begin(), planes.end());
  return out;
}

}  // namespace quanthelly::detail
