#include "quanthelly/combinatorial.hpp"

#include <algorithm>
#include <optional>

#include "linalg.hpp"
#include "quanthelly/error.hpp"

namespace quanthelly {

int Family::dim() const {
  if (members.empty()) throw InvalidArgument("family is empty");
  return members.front().dim();
}

Family Family::from_points(const std::vector<Point>& points) {
  Family f;
  for (const auto& p : points) f.members.push_back(ConvexBody::point(p));
  return f;
}

Family Family::subfamily(const IndexSet& idx) const {
  Family f;
  for (auto i : idx) {
    f.members.push_back(members.at(i));
    if (!labels.empty()) f.labels.push_back(labels.at(i));
  }
  return f;
}

ConvexBody hull_of_union(const Family& f, const IndexSet& idx) {
  std::vector<Point> pts;
  for (auto i : idx) {
    const ConvexBody& b = f.members.at(i);
    if (b.is_empty()) continue;
    const auto& v = b.vertex_list();
    pts.insert(pts.end(), v.begin(), v.end());
  }
  if (pts.empty()) return ConvexBody::empty(f.dim());
  return convex_hull(pts);
}

HellyParameters default_helly_parameters(const Measure& m, int dim, const Scalar& lambda, const Scalar& eps) {
  const std::size_t d = static_cast<std::size_t>(dim);
  switch (m.kind()) {
    case MeasureKind::Nonempty:
      return {d + 1, 1};
    case MeasureKind::LatticeCount: {
      const std::size_t k = std::max<std::size_t>(1, ceil_of(lambda).get_ui());
      return {(std::size_t{1} << d) * k, k};
    }
    case MeasureKind::Volume:
    case MeasureKind::Perimeter:
      return {2 * d, default_vertex_budget(dim, eps)};
  }
  throw InvalidArgument("unknown measure kind");
}

namespace {

// Nearest point of conv(pts) to t. When t lies outside, the nearest point
// is in the relative interior of a face spanned by at most d affinely
// independent points, so projecting onto every such subset suffices.
struct Nearest {
  Scalar dist2;
  Point point;
};

Nearest nearest_in_hull(const Point& t, const std::vector<Point>& pts) {
  if (contains(convex_hull(pts), t)) return {Scalar(0), t};
  const std::size_t d = t.dim();
  std::optional<Nearest> best;
  for (std::size_t s = 1; s <= d; ++s) {
    for_each_subset(pts.size(), s, [&](const IndexSet& idx) {
      const Point& p0 = pts[idx[0]];
      std::vector<Point> dirs;
      for (std::size_t i = 1; i < s; ++i) dirs.push_back(pts[idx[i]] - p0);
      Point q = p0;
      if (!dirs.empty()) {
        detail::Matrix g(dirs.size(), Vector(dirs.size()));
        Vector rhs(dirs.size());
        for (std::size_t i = 0; i < dirs.size(); ++i) {
          for (std::size_t j = 0; j < dirs.size(); ++j) g[i][j] = dot(dirs[i].coords(), dirs[j].coords());
          rhs[i] = dot((t - p0).coords(), dirs[i].coords());
        }
        auto lam = detail::solve(g, rhs);
        if (!lam) return true;
        Scalar sum = 0;
        for (const auto& l : *lam) {
          if (l < 0) return true;
          sum += l;
        }
        if (sum > 1) return true;
        for (std::size_t i = 0; i < dirs.size(); ++i) q = q + (*lam)[i] * dirs[i];
      }
      Point diff = t - q;
      Scalar d2 = dot(diff.coords(), diff.coords());
      if (!best || d2 < best->dist2) best = Nearest{d2, q};
      return true;
    });
  }
  return *best;
}

std::vector<Point> chosen_points(const std::vector<std::vector<Point>>& classes, const std::vector<std::size_t>& c) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < classes.size(); ++i) pts.push_back(classes[i][c[i]]);
  return pts;
}

Scalar potential(const std::vector<Point>& targets, const std::vector<Point>& pts) {
  Scalar s = 0;
  for (const auto& t : targets) s += nearest_in_hull(t, pts).dist2;
  return s;
}

bool covers(const std::vector<Point>& targets, const std::vector<Point>& pts) {
  ConvexBody h = convex_hull(pts);
  return std::all_of(targets.begin(), targets.end(), [&](const Point& t) { return contains(h, t); });
}

constexpr std::size_t kExhaustiveLimit = 1000000;
constexpr std::size_t kPivotLimit = 10000;

}  // namespace

std::vector<std::size_t> colorful_caratheodory(const std::vector<Point>& targets,
                                               const std::vector<std::vector<Point>>& classes) {
  if (targets.empty()) throw InvalidArgument("colorful_caratheodory: no targets");
  const std::size_t d = targets.front().dim();
  const std::size_t k = targets.size();
  const std::size_t n = std::max(k * d, d + 1);
  if (classes.size() != n) {
    throw InvalidArgument("colorful_caratheodory: expected " + std::to_string(n) + " classes, got " +
                          std::to_string(classes.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (classes[i].empty()) throw InvalidArgument("colorful_caratheodory: class " + std::to_string(i) + " is empty");
    ConvexBody h = convex_hull(classes[i]);
    for (std::size_t j = 0; j < k; ++j) {
      if (!contains(h, targets[j])) {
        throw HypothesisViolated("colorful_caratheodory: hull of class " + std::to_string(i) +
                                 " misses target " + std::to_string(j));
      }
    }
  }

  std::vector<std::size_t> choice(n, 0);
  for (std::size_t iter = 0; iter < kPivotLimit; ++iter) {
    std::vector<Point> pts = chosen_points(classes, choice);
    if (covers(targets, pts)) return choice;
    const Scalar pot = potential(targets, pts);
    // Separate the farthest target from the current hull.
    std::optional<Nearest> far;
    std::size_t far_idx = 0;
    for (std::size_t j = 0; j < k; ++j) {
      Nearest nj = nearest_in_hull(targets[j], pts);
      if (!far || nj.dist2 > far->dist2) {
        far = nj;
        far_idx = j;
      }
    }
    const Vector u = (targets[far_idx] - far->point).coords();
    std::optional<std::size_t> best_class;
    std::size_t best_member = 0;
    Scalar best_gain;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t arg = 0;
      for (std::size_t y = 1; y < classes[i].size(); ++y) {
        if (dot(classes[i][y], u) > dot(classes[i][arg], u)) arg = y;
      }
      if (arg == choice[i]) continue;
      auto trial = choice;
      trial[i] = arg;
      if (potential(targets, chosen_points(classes, trial)) >= pot) continue;
      Scalar gain = dot(classes[i][arg], u);
      if (!best_class || gain > best_gain) {
        best_class = i;
        best_member = arg;
        best_gain = gain;
      }
    }
    if (!best_class) break;
    choice[*best_class] = best_member;
  }

  // Exhaustive fallback over the product of the classes.
  std::size_t product = 1;
  for (const auto& c : classes) {
    if (product > kExhaustiveLimit / c.size()) {
      product = kExhaustiveLimit + 1;
      break;
    }
    product *= c.size();
  }
  if (product > kExhaustiveLimit) {
    throw BudgetExceeded("colorful_caratheodory: pivoting stalled and the search space exceeds the exhaustive budget");
  }
  std::vector<std::size_t> c(n, 0);
  while (true) {
    if (covers(targets, chosen_points(classes, c))) return c;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++c[i] < classes[i].size()) break;
      c[i] = 0;
      if (i == 0) {
        throw VerificationFailed("colorful_caratheodory: no colorful choice covers the targets");
      }
    }
  }
}

std::size_t max_tverberg_parts(std::size_t n, int dim, const HellyParameters& p) {
  const std::size_t per_part = static_cast<std::size_t>(dim) * p.h * p.c;
  if (n == 0) return 0;
  if (p.h == static_cast<std::size_t>(dim) + 1 && p.c == 1) return (n - 1) / (static_cast<std::size_t>(dim) + 1) + 1;
  return (n - 1) / per_part + 1;
}

}  // namespace quanthelly
