#include "quanthelly/floating_body.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "quanthelly/error.hpp"

namespace quanthelly {

DirectionSet::DirectionSet(std::vector<Direction> d, DirectionScheme s, int order)
    : directions_(std::move(d)), scheme_(s), order_(order) {
  std::sort(directions_.begin(), directions_.end());
  directions_.erase(std::unique(directions_.begin(), directions_.end()), directions_.end());
  if (directions_.empty()) throw InvalidArgument("direction set is empty");
  for (const auto& v : directions_) {
    if (v.dim() != directions_.front().dim()) throw DimensionError("direction set mixes dimensions");
  }
}

DirectionSet DirectionSet::axis(int dim) {
  if (dim < 1) throw InvalidArgument("axis directions need dim >= 1");
  std::vector<Direction> out;
  for (int i = 0; i < dim; ++i) {
    Vector e(dim, Scalar(0));
    e[i] = 1;
    out.emplace_back(e);
    e[i] = -1;
    out.emplace_back(e);
  }
  return DirectionSet(std::move(out), DirectionScheme::Axis, 0);
}

DirectionSet DirectionSet::farey(int n) {
  if (n < 1) throw InvalidArgument("farey order must be >= 1");
  std::vector<Direction> out;
  for (int a = -n; a <= n; ++a) {
    for (int b = -n; b <= n; ++b) {
      if (a == 0 && b == 0) continue;
      if (std::gcd(a, b) != 1) continue;
      out.emplace_back(Vector{a, b});
    }
  }
  return DirectionSet(std::move(out), DirectionScheme::Farey, n);
}

DirectionSet DirectionSet::custom(std::vector<Direction> directions) {
  return DirectionSet(std::move(directions), DirectionScheme::Custom, 0);
}

DirectionSet DirectionSet::merged(const DirectionSet& other) const {
  std::vector<Direction> all = directions_;
  all.insert(all.end(), other.directions_.begin(), other.directions_.end());
  return DirectionSet(std::move(all), DirectionScheme::Custom, 0);
}

namespace {

Vector negated(Vector v) {
  for (auto& x : v) x = -x;
  return v;
}

Scalar area_below(const ConvexBody& k, const Vector& v, const Scalar& alpha) {
  return evaluate(Measure::volume(), clip(k, Halfspace(v, alpha))).value();
}

// Smallest s in [0, 1] with a + b s + c s² ≥ target, where the quadratic is
// increasing on [0, 1], a < target ≤ a + b + c. Exact when the root is
// rational, otherwise the upper end of a bracket of width ≤ width.
Scalar quadratic_crossing(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& target,
                          const Scalar& width) {
  if (c == 0) return (target - a) / b;
  Scalar disc = b * b - 4 * c * (a - target);
  Scalar root;
  if (exact_sqrt(disc, root)) {
    for (const Scalar& s : {Scalar((-b + root) / (2 * c)), Scalar((-b - root) / (2 * c))}) {
      if (s >= 0 && s <= 1) return s;
    }
  }
  Scalar lo = 0, hi = 1;
  while (hi - lo > width) {
    Scalar mid = (lo + hi) / 2;
    if (a + b * mid + c * mid * mid >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

Scalar minimal_alpha_volume(const ConvexBody& k, const Vector& v, const Scalar& target, const Scalar& rel_tol) {
  std::vector<Scalar> t;
  for (const auto& p : k.vertex_list()) t.push_back(dot(p, v));
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  if (target <= 0) return t.front();
  const Scalar span = t.back() - t.front();
  Scalar prev_area = 0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    Scalar cur = area_below(k, v, t[i]);
    if (cur < target) {
      prev_area = cur;
      continue;
    }
    if (cur == target) return t[i];
    // The area is quadratic in α between consecutive vertex levels.
    const Scalar h = t[i] - t[i - 1];
    const Scalar mid = area_below(k, v, t[i - 1] + h / 2);
    const Scalar b = 4 * (mid - prev_area) - (cur - prev_area);
    const Scalar c = (cur - prev_area) - b;
    const Scalar s = quadratic_crossing(prev_area, b, c, target, rel_tol * span / h);
    return t[i - 1] + s * h;
  }
  throw InvalidArgument("minimal_v_halfspace: target exceeds the measure of the body");
}

Scalar minimal_alpha_perimeter(const ConvexBody& k, const Vector& v, const Measure& m, const Scalar& target,
                               const Scalar& rel_tol) {
  Scalar lo = -support(k, negated(v)).value;
  Scalar hi = support(k, v).value;
  if (!at_least(m, k, target)) throw InvalidArgument("minimal_v_halfspace: target exceeds the measure of the body");
  if (at_least(m, clip(k, Halfspace(v, lo)), target)) return lo;
  const Scalar width = rel_tol * (hi - lo);
  while (hi - lo > width) {
    Scalar mid = (lo + hi) / 2;
    if (at_least(m, clip(k, Halfspace(v, mid)), target)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

Scalar minimal_alpha_lattice(const ConvexBody& k, const Vector& v, const Measure& m, const Scalar& target) {
  auto pts = lattice_points(k, m);
  if (Scalar(static_cast<long>(pts.size())) < target) {
    throw InvalidArgument("minimal_v_halfspace: target exceeds the lattice count of the body");
  }
  std::vector<Scalar> proj;
  for (const auto& p : pts) proj.push_back(dot(p, v));
  std::sort(proj.begin(), proj.end());
  if (std::adjacent_find(proj.begin(), proj.end()) != proj.end()) {
    throw InvalidArgument("minimal_v_halfspace: direction is not generic for the lattice");
  }
  const Integer need = ceil_of(target);
  if (need <= 0) {
    return -support(k, negated(v)).value;
  }
  return proj[need.get_ui() - 1];
}

std::vector<Point> lattice_box_points(const ConvexBody& k, const Measure& m) {
  const auto& verts = k.vertex_list();
  Scalar lo_x = verts[0][0], hi_x = verts[0][0], lo_y = verts[0][1], hi_y = verts[0][1];
  for (const auto& p : verts) {
    lo_x = std::min(lo_x, p[0]);
    hi_x = std::max(hi_x, p[0]);
    lo_y = std::min(lo_y, p[1]);
    hi_y = std::max(hi_y, p[1]);
  }
  return lattice_points(ConvexBody::box(Point{lo_x, lo_y}, Point{hi_x, hi_y}), m);
}

MeasureValue ratio_loss(const MeasureValue& inner, const MeasureValue& outer) {
  // 1 - inner/outer, clamped to [0, 1].
  auto clamp = [](Scalar x) { return std::clamp(x, Scalar(0), Scalar(1)); };
  if (outer.hi() == 0) return MeasureValue::exact(0);
  Scalar lo = clamp(1 - inner.hi() / outer.lo());
  Scalar hi = clamp(1 - inner.lo() / outer.hi());
  if (outer.is_exact() && inner.is_exact()) return MeasureValue::exact(clamp(1 - inner.lo() / outer.lo()));
  return MeasureValue::interval(lo, hi);
}

}  // namespace

Halfspace minimal_v_halfspace(const ConvexBody& k, const Direction& v, const Measure& m, const Scalar& target,
                              const FloatingBodyOptions& options) {
  if (k.dim() != 2 || v.dim() != 2) throw Unsupported("minimal_v_halfspace: plane only");
  if (k.is_empty()) throw InvalidArgument("minimal_v_halfspace: body is empty");
  if (!k.bounded()) throw InvalidArgument("minimal_v_halfspace: body is unbounded");
  const Vector& n = v.vector();
  switch (m.kind()) {
    case MeasureKind::Volume:
      return Halfspace(n, minimal_alpha_volume(k, n, target, options.rel_tol));
    case MeasureKind::Perimeter:
      return Halfspace(n, minimal_alpha_perimeter(k, n, m, target, options.rel_tol));
    case MeasureKind::LatticeCount:
      return Halfspace(n, minimal_alpha_lattice(k, n, m, target));
    case MeasureKind::Nonempty: {
      if (target > 1) throw InvalidArgument("minimal_v_halfspace: target exceeds the measure of the body");
      return Halfspace(n, Scalar(-support(k, negated(n)).value));
    }
  }
  throw InvalidArgument("unknown measure kind");
}

bool is_generic_direction(const ConvexBody& k, const Direction& v, const Measure& m) {
  std::vector<Scalar> proj;
  for (const auto& p : lattice_box_points(k, m)) proj.push_back(dot(p, v.vector()));
  std::sort(proj.begin(), proj.end());
  return std::adjacent_find(proj.begin(), proj.end()) == proj.end();
}

Direction generic_direction(const ConvexBody& k, const Direction& v, const Measure& m) {
  if (is_generic_direction(k, v, m)) return v;
  const auto pts = lattice_box_points(k, m);
  Scalar bound = 1;
  for (const auto& p : pts) bound = std::max({bound, abs_of(p[0]), abs_of(p[1])});
  Integer big = ceil_of(bound);
  big = (2 * big + 1) * (2 * big + 1);
  const Vector& a = v.vector();
  for (int attempt = 0; attempt < 64; ++attempt, big *= 2) {
    Direction tilted(Vector{big * a[0] - a[1], big * a[1] + a[0]});
    if (is_generic_direction(k, tilted, m)) return tilted;
  }
  throw BudgetExceeded("generic_direction: no generic tilt found");
}

FloatingBodyResult floating_body(const ConvexBody& k, const Measure& m, const Scalar& eps, const DirectionSet& d,
                                 const FloatingBodyOptions& options) {
  if (eps <= 0 || eps >= 1) throw InvalidArgument("floating_body: eps must lie in (0,1)");
  const MeasureValue total = evaluate(m, k);
  if (total.is_infinite()) throw InvalidArgument("floating_body: measure of the body is infinite");
  if (total.hi() <= 0) throw InvalidArgument("floating_body: measure of the body is zero");
  const Scalar target = (1 - eps) * total.hi();
  FloatingBodyResult out;
  out.body = k;
  for (const auto& v0 : d.directions()) {
    Direction v = m.discrete() ? generic_direction(k, v0, m) : v0;
    Halfspace h = minimal_v_halfspace(k, v, m, target, options);
    out.cuts.push_back({v, h});
    out.body = clip(out.body, h);
  }
  out.delta = ratio_loss(evaluate(m, out.body), total);
  return out;
}

bool check_separation(const ConvexBody& k, const Measure& m, const Scalar& eps, const DirectionSet& d,
                      const ConvexBody& a) {
  const MeasureValue total = evaluate(m, k);
  const ConvexBody ak = intersect(a, k);
  if (!at_least(m, ak, (1 - eps) * total.hi())) return true;
  return is_subset(floating_body(k, m, eps, d).body, a);
}

}  // namespace quanthelly
