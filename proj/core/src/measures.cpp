#include "quanthelly/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <tuple>

#include "linalg.hpp"
#include "quanthelly/error.hpp"

namespace quanthelly {

namespace {

constexpr unsigned kStartBits = 64;
constexpr unsigned kMaxBits = 16384;
constexpr std::size_t kMaxDpVertices = 48;

detail::Matrix checked_inverse(const std::vector<Vector>& basis, const char* what) {
  const std::size_t d = basis.size();
  if (d != 2 && d != 3) throw DimensionError(std::string(what) + ": lattice dimension must be 2 or 3");
  for (const auto& row : basis) {
    if (row.size() != d) throw DimensionError(std::string(what) + ": basis must be square");
  }
  auto inv = detail::inverse(basis);
  if (!inv) throw InvalidArgument(std::string(what) + ": basis is not full rank");
  return *inv;
}

bool integral_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return is_integral(x); });
}

std::string ratio_text(const MeasureValue& achieved, const Scalar& level) {
  if (level == 0) return "n/a";
  return format_decimal(achieved.lo() / level, 8);
}

}  // namespace

Measure Measure::volume() { return Measure(); }

Measure Measure::perimeter(Scalar tol) {
  if (tol <= 0 || tol >= 1) throw InvalidArgument("perimeter tolerance must lie in (0,1)");
  Measure m;
  m.kind_ = MeasureKind::Perimeter;
  m.tol_ = std::move(tol);
  return m;
}

Measure Measure::nonempty() {
  Measure m;
  m.kind_ = MeasureKind::Nonempty;
  return m;
}

Measure Measure::lattice(std::vector<Vector> basis, std::vector<std::vector<Vector>> excluded) {
  Measure m;
  m.kind_ = MeasureKind::LatticeCount;
  m.inverse_ = checked_inverse(basis, "lattice");
  m.basis_ = std::move(basis);
  for (const auto& sub : excluded) {
    if (sub.size() != m.basis_.size()) throw InvalidArgument("excluded sublattice must be full rank");
    m.excluded_inverse_.push_back(checked_inverse(sub, "excluded sublattice"));
    for (const auto& row : sub) {
      if (!m.in_lattice(Point(row))) throw InvalidArgument("excluded sublattice is not contained in the lattice");
    }
  }
  m.excluded_ = std::move(excluded);
  return m;
}

Measure Measure::integer_lattice(int dim, std::vector<std::vector<Vector>> excluded) {
  std::vector<Vector> basis(dim, Vector(dim, Scalar(0)));
  for (int i = 0; i < dim; ++i) basis[i][i] = 1;
  return lattice(std::move(basis), std::move(excluded));
}

Vector Measure::lattice_coords(const Point& x) const { return detail::row_times(x.coords(), inverse_); }

Point Measure::from_lattice_coords(const Vector& c) const { return Point(detail::row_times(c, basis_)); }

bool Measure::in_lattice(const Point& x) const { return integral_vector(lattice_coords(x)); }

bool Measure::in_set(const Point& x) const {
  if (!in_lattice(x)) return false;
  for (const auto& inv : excluded_inverse_) {
    if (integral_vector(detail::row_times(x.coords(), inv))) return false;
  }
  return true;
}

Integer Measure::period() const {
  Integer n = 1;
  for (const auto& sub : excluded_) {
    // [L : L_i] = |det(B_i B^-1)|.
    detail::Matrix rel;
    for (const auto& row : sub) rel.push_back(detail::row_times(row, inverse_));
    Scalar idx = abs_of(detail::determinant(rel));
    n = lcm_of(n, idx.get_num());
  }
  return n;
}

const Scalar& MeasureValue::value() const {
  if (infinite_ || lo_ != hi_) throw InvalidArgument("measure value is not an exact rational");
  return lo_;
}

MeasureValue perimeter_bounds(const ConvexBody& k, unsigned bits) {
  if (k.dim() != 2) throw Unsupported("perimeter is only available in the plane");
  if (k.is_empty()) return MeasureValue::exact(0);
  if (!k.bounded()) return k.affine_dim() >= 1 ? MeasureValue::infinite() : MeasureValue::exact(0);
  const auto& v = *k.vertices();
  if (v.size() == 1) return MeasureValue::exact(0);
  Scalar lo = 0, hi = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    Scalar dx = q[0] - p[0], dy = q[1] - p[1];
    SqrtBounds s = sqrt_bounds(dx * dx + dy * dy, bits);
    lo += s.lo;
    hi += s.hi;
  }
  // A segment is traversed there and back, so its perimeter is 2 × length.
  return MeasureValue::interval(lo, hi);
}

namespace {

MeasureValue evaluate_perimeter(const Measure& m, const ConvexBody& k) {
  for (unsigned bits = kStartBits;; bits *= 2) {
    MeasureValue b = perimeter_bounds(k, bits);
    if (b.is_infinite() || b.is_exact()) return b;
    if (b.hi() - b.lo() <= m.tol() * b.hi()) return b;
    if (bits >= kMaxBits) {
      throw BudgetExceeded("perimeter tolerance " + format_scalar(m.tol()) + " not reached at " +
                           std::to_string(bits) + " bits");
    }
  }
}

Scalar volume_of(const ConvexBody& k) {
  if (k.affine_dim() < k.dim()) return 0;
  Scalar total = 0;
  for (const auto& s : triangulate(k)) total += simplex_volume(s);
  return total;
}

std::vector<Point> enumerate_bounded(const ConvexBody& k, const Measure& m) {
  const auto& verts = *k.vertices();
  const std::size_t d = static_cast<std::size_t>(k.dim());
  std::vector<Integer> lo(d), hi(d);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    Vector c = m.lattice_coords(verts[i]);
    for (std::size_t j = 0; j < d; ++j) {
      Integer f = floor_of(c[j]), g = ceil_of(c[j]);
      if (i == 0 || f < lo[j]) lo[j] = f;
      if (i == 0 || g > hi[j]) hi[j] = g;
    }
  }
  const auto hs = k.h_rep();
  std::vector<Point> out;
  Vector c(d);
  for (std::size_t j = 0; j < d; ++j) c[j] = lo[j];
  while (true) {
    Point x = m.from_lattice_coords(c);
    bool inside = std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return h.contains(x); });
    if (inside && m.in_set(x)) out.push_back(std::move(x));
    std::size_t j = 0;
    for (; j < d; ++j) {
      if (c[j] < hi[j]) {
        c[j] += 1;
        break;
      }
      c[j] = lo[j];
    }
    if (j == d) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// For unbounded K, |K ∩ S| is 0 or infinite. Writing K = W + cone(r_i) and
// shifting along N·l_i (l_i the primitive lattice vector on r_i, N the
// period) preserves membership in S, so a point of S exists in K iff one
// exists in W + Σ [0,1]·N·l_i.
MeasureValue lattice_count_unbounded(const ConvexBody& k, const Measure& m) {
  const Integer n = m.period();
  std::vector<Vector> steps;
  for (const auto& r : k.rays()) {
    Vector lc = primitive_integer_vector(m.lattice_coords(Point(r)));
    for (auto& x : lc) x *= n;
    steps.push_back(m.from_lattice_coords(lc).coords());
  }
  std::vector<Point> pts = k.window();
  for (const auto& s : steps) {
    const std::size_t count = pts.size();
    for (std::size_t i = 0; i < count; ++i) pts.push_back(pts[i] + Point(s));
  }
  ConvexBody zone = convex_hull(pts);
  return enumerate_bounded(zone, m).empty() ? MeasureValue::exact(0) : MeasureValue::infinite();
}

}  // namespace

MeasureValue evaluate(const Measure& m, const ConvexBody& k) {
  switch (m.kind()) {
    case MeasureKind::Nonempty:
      return MeasureValue::exact(k.is_empty() ? 0 : 1);
    case MeasureKind::Volume:
      if (k.is_empty()) return MeasureValue::exact(0);
      if (!k.bounded()) return k.affine_dim() == k.dim() ? MeasureValue::infinite() : MeasureValue::exact(0);
      return MeasureValue::exact(volume_of(k));
    case MeasureKind::Perimeter:
      return evaluate_perimeter(m, k);
    case MeasureKind::LatticeCount:
      if (k.dim() != m.lattice_dim()) throw DimensionError("lattice and body dimensions differ");
      if (k.is_empty()) return MeasureValue::exact(0);
      if (!k.bounded()) return lattice_count_unbounded(k, m);
      return MeasureValue::exact(Scalar(static_cast<long>(enumerate_bounded(k, m).size())));
  }
  throw InvalidArgument("unknown measure kind");
}

bool at_least(const Measure& m, const ConvexBody& k, const Scalar& t) {
  if (m.kind() != MeasureKind::Perimeter) return evaluate(m, k).at_least(t);
  if (t <= 0) return true;
  for (unsigned bits = kStartBits;; bits *= 2) {
    MeasureValue b = perimeter_bounds(k, bits);
    if (b.at_least(t)) return true;
    if (b.below(t)) return false;
    if (bits >= kMaxBits) {
      throw BudgetExceeded("cannot decide perimeter >= " + format_scalar(t) + " within precision budget");
    }
  }
}

std::vector<Point> lattice_points(const ConvexBody& k, const Measure& m) {
  if (m.kind() != MeasureKind::LatticeCount) throw InvalidArgument("lattice_points needs a lattice measure");
  if (k.dim() != m.lattice_dim()) throw DimensionError("lattice and body dimensions differ");
  if (k.is_empty()) return {};
  if (!k.bounded()) throw Unsupported("lattice_points: body is unbounded");
  return enumerate_bounded(k, m);
}

std::size_t default_vertex_budget(int dim, const Scalar& eps) {
  const std::size_t floor_budget = static_cast<std::size_t>(dim) + 1;
  if (eps <= 0) return std::numeric_limits<std::size_t>::max();
  // ceil((2d/ε)^((d-1)/2)) computed exactly for d = 2, 3.
  Scalar base = Scalar(2 * dim) / eps;
  Integer k;
  if (dim == 3) {
    k = ceil_of(base);
  } else {
    Integer c = ceil_of(base);
    mpz_sqrt(k.get_mpz_t(), c.get_mpz_t());
    while (Scalar(k * k) < base) k += 1;
  }
  if (!k.fits_ulong_p()) return std::numeric_limits<std::size_t>::max();
  return std::max<std::size_t>(floor_budget, k.get_ui());
}

namespace {

// Max-area k-gon with vertices among a convex polygon's vertices, by
// dynamic programming over fans from the smallest chosen index.
std::vector<Point> best_subpolygon(const std::vector<Point>& v, std::size_t k) {
  const std::size_t n = v.size();
  if (k >= n) return v;
  Scalar best_area = -1;
  std::vector<std::size_t> best_pick;
  for (std::size_t s = 0; s + k <= n; ++s) {
    // area[c][j]: doubled area of the best chain s -> ... -> j using c vertices.
    std::vector<std::vector<std::optional<Scalar>>> area(k + 1, std::vector<std::optional<Scalar>>(n));
    std::vector<std::vector<std::size_t>> prev(k + 1, std::vector<std::size_t>(n, n));
    for (std::size_t j = s + 1; j < n; ++j) area[2][j] = Scalar(0);
    for (std::size_t c = 3; c <= k; ++c) {
      for (std::size_t j = s + c - 1; j < n; ++j) {
        for (std::size_t i = s + c - 2; i < j; ++i) {
          if (!area[c - 1][i]) continue;
          Scalar a = *area[c - 1][i] + cross2d(v[s], v[i], v[j]);
          if (!area[c][j] || a > *area[c][j]) {
            area[c][j] = a;
            prev[c][j] = i;
          }
        }
      }
    }
    for (std::size_t j = s + k - 1; j < n; ++j) {
      if (area[k][j] && *area[k][j] > best_area) {
        best_area = *area[k][j];
        best_pick.clear();
        std::size_t cur = j;
        for (std::size_t c = k; c >= 2; --c) {
          best_pick.push_back(cur);
          cur = prev[c][cur];
        }
        best_pick.push_back(s);
      }
    }
  }
  std::vector<Point> out;
  for (auto idx : best_pick) out.push_back(v[idx]);
  return out;
}

double approx_perimeter(const std::vector<Point>& pts) {
  std::vector<Point> h = hull2d(pts);
  if (h.size() < 2) return 0;
  double s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Point& p = h[i];
    const Point& q = h[(i + 1) % h.size()];
    s += std::hypot(Scalar(q[0] - p[0]).get_d(), Scalar(q[1] - p[1]).get_d());
  }
  return s;
}

Scalar approx_volume(const std::vector<Point>& pts) {
  if (pts.empty()) return 0;
  return evaluate(Measure::volume(), convex_hull(pts)).value();
}

// Spread first while the hull is degenerate, volume afterwards.
std::tuple<int, Scalar, Scalar> volume_score(const std::vector<Point>& c) {
  ConvexBody h = convex_hull(c);
  Scalar spread = 0;
  for (const auto& p : c) {
    Point d = p - c.front();
    spread += dot(d.coords(), d.coords());
  }
  return {h.affine_dim(), approx_volume(c), spread};
}

// Greedy insertion of K's vertices by largest gain of `score`.
template <typename Score, typename Done>
std::vector<Point> greedy_subset(const std::vector<Point>& verts, std::vector<Point> chosen, std::size_t budget,
                                 Score score, Done done) {
  std::vector<bool> used(verts.size(), false);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    used[i] = std::find(chosen.begin(), chosen.end(), verts[i]) != chosen.end();
  }
  while (!done(chosen)) {
    if (chosen.size() >= budget || chosen.size() == verts.size()) break;
    std::size_t pick = verts.size();
    std::optional<decltype(score(chosen))> best;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (used[i]) continue;
      chosen.push_back(verts[i]);
      auto val = score(chosen);
      chosen.pop_back();
      if (!best || val > *best) {
        best = val;
        pick = i;
      }
    }
    used[pick] = true;
    chosen.push_back(verts[pick]);
  }
  return chosen;
}

}  // namespace

Inscribed inscribed_polytope(const Measure& m, const ConvexBody& k, const Scalar& eps,
                             const InscribedOptions& options) {
  if (eps < 0 || eps >= 1) throw InvalidArgument("inscribed_polytope: eps must lie in [0,1)");
  if (k.is_empty()) throw InvalidArgument("inscribed_polytope: body is empty");
  const MeasureValue total = evaluate(m, k);
  if (total.is_infinite()) throw InvalidArgument("inscribed_polytope: measure of the body is infinite");
  const Scalar level = options.level ? *options.level : total.hi();
  if (!total.at_least(level) && !(m.kind() == MeasureKind::Perimeter && at_least(m, k, level))) {
    throw InvalidArgument("inscribed_polytope: level exceeds the measure of the body");
  }
  const Scalar target = (1 - eps) * level;

  auto finish = [&](std::vector<Point> pts) {
    ConvexBody p = convex_hull(pts);
    Inscribed r{p, p.vertex_list().size(), evaluate(m, p)};
    return r;
  };

  if (m.kind() == MeasureKind::Nonempty) {
    const auto& pts = k.bounded() ? k.vertex_list() : k.window();
    return finish({*std::min_element(pts.begin(), pts.end())});
  }

  if (m.kind() == MeasureKind::LatticeCount) {
    const std::size_t need = ceil_of(target).get_ui();
    const std::size_t budget = options.budget ? *options.budget : std::max<std::size_t>(need, 1);
    if (need > budget) {
      throw BudgetExceeded("inscribed_polytope: " + std::to_string(need) + " lattice points needed, budget " +
                           std::to_string(budget));
    }
    auto pts = lattice_points(k, m);
    if (need == 0) {
      const auto& vs = k.vertex_list();
      return finish({vs.front()});
    }
    pts.resize(need);
    return finish(std::move(pts));
  }

  const std::size_t budget = options.budget ? *options.budget : default_vertex_budget(k.dim(), eps);
  const auto& verts = k.vertex_list();
  if (target <= 0) return finish({verts.front()});

  std::vector<Point> chosen;
  if (m.kind() == MeasureKind::Volume && k.dim() == 2) {
    const std::size_t lo = std::min<std::size_t>(3, verts.size());
    if (verts.size() <= kMaxDpVertices) {
      for (std::size_t c = lo; c <= std::min(budget, verts.size()); ++c) {
        chosen = best_subpolygon(verts, c);
        if (shoelace2(hull2d(chosen)) >= 2 * target) break;
      }
    } else {
      chosen = greedy_subset(verts, {verts.front()}, budget, volume_score,
                             [&](const std::vector<Point>& c) { return approx_volume(c) >= target; });
    }
  } else if (m.kind() == MeasureKind::Volume) {
    chosen = greedy_subset(verts, {verts.front()}, budget, volume_score,
                           [&](const std::vector<Point>& c) { return approx_volume(c) >= target; });
  } else {
    if (k.dim() != 2) throw Unsupported("perimeter is only available in the plane");
    chosen = greedy_subset(
        verts, {verts.front()}, budget, [](const std::vector<Point>& c) { return approx_perimeter(c); },
        [&](const std::vector<Point>& c) { return at_least(m, convex_hull(c), target); });
  }
  if (chosen.empty()) chosen.push_back(verts.front());
  Inscribed r = finish(chosen);
  bool ok = m.kind() == MeasureKind::Perimeter ? at_least(m, r.body, target) : r.achieved.at_least(target);
  if (!ok || r.vertex_count > budget) {
    throw BudgetExceeded("inscribed_polytope: vertex budget " + std::to_string(budget) + " reached with ratio " +
                         ratio_text(r.achieved, level));
  }
  return r;
}

}  // namespace quanthelly
